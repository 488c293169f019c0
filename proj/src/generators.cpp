#include "thue/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "thue/error.hpp"

namespace thue {
namespace {

// Straight-line drawing; the rotation at each vertex is its neighbours sorted
// clockwise by angle.
struct Drawing {
  std::vector<std::pair<double, double>> pos;
  std::vector<std::pair<Vertex, Vertex>> edges;
  PlaneGraph::Labels labels;

  Vertex add(double x, double y) {
    pos.emplace_back(x, y);
    return static_cast<Vertex>(pos.size() - 1);
  }
  void join(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  void join_path(const std::vector<Vertex>& vs) {
    for (std::size_t i = 1; i < vs.size(); ++i) join(vs[i - 1], vs[i]);
  }
  void join_cycle(const std::vector<Vertex>& vs) {
    join_path(vs);
    if (vs.size() > 2) join(vs.back(), vs.front());
  }

  PlaneGraph finish() {
    const std::size_t n = pos.size();
    std::vector<std::vector<Vertex>> rot(n);
    for (auto [a, b] : edges) {
      rot[a].push_back(b);
      rot[b].push_back(a);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto angle = [&](Vertex u) {
        return std::atan2(pos[u].second - pos[v].second, pos[u].first - pos[v].first);
      };
      std::sort(rot[v].begin(), rot[v].end(),
                [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
    }
    return PlaneGraph(n, std::move(rot), std::move(labels));
  }
};

constexpr double kTau = 2.0 * std::numbers::pi;

std::pair<double, double> polar(double r, double theta) {
  return {r * std::cos(theta), r * std::sin(theta)};
}

[[noreturn]] void bad(std::string_view family, const std::string& why) {
  throw Error(ErrorCode::BadParams, std::string(family) + ": " + why);
}

void need_count(std::string_view family, std::span<const int> p, std::size_t k) {
  if (p.size() != k) {
    bad(family, "expected " + std::to_string(k) + " parameter(s), got " + std::to_string(p.size()));
  }
}

void need_at_least(std::string_view family, int value, int min, const char* what) {
  if (value < min) bad(family, std::string(what) + " must be >= " + std::to_string(min));
}

PlaneGraph path(int n) {
  Drawing d;
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back(d.add(i, 0));
  d.join_path(vs);
  d.labels["path"] = vs;
  return d.finish();
}

PlaneGraph cycle(int n) {
  Drawing d;
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) {
    auto [x, y] = polar(1.0, -kTau * i / n);
    vs.push_back(d.add(x, y));
  }
  d.join_cycle(vs);
  d.labels["cycle"] = vs;
  return d.finish();
}

PlaneGraph star(int n) {
  Drawing d;
  const Vertex hub = d.add(0, 0);
  std::vector<Vertex> leaves;
  for (int i = 0; i < n; ++i) {
    auto [x, y] = polar(1.0, -kTau * i / n);
    leaves.push_back(d.add(x, y));
    d.join(hub, leaves.back());
  }
  d.labels["hub"] = {hub};
  d.labels["leaves"] = leaves;
  return d.finish();
}

PlaneGraph subdivided_star(const std::vector<int>& arm_extra) {
  Drawing d;
  const Vertex hub = d.add(0, 0);
  const int n = static_cast<int>(arm_extra.size());
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> arm;
    for (int k = 1; k <= arm_extra[i] + 1; ++k) {
      auto [x, y] = polar(k, -kTau * i / n);
      arm.push_back(d.add(x, y));
    }
    d.join(hub, arm.front());
    d.join_path(arm);
    d.labels["arm[" + std::to_string(i) + "]"] = arm;
  }
  d.labels["hub"] = {hub};
  return d.finish();
}

PlaneGraph wheel(int n) {
  Drawing d;
  const Vertex hub = d.add(0, 0);
  std::vector<Vertex> rim;
  for (int i = 0; i < n; ++i) {
    auto [x, y] = polar(1.0, -kTau * i / n);
    rim.push_back(d.add(x, y));
    d.join(hub, rim.back());
  }
  d.join_cycle(rim);
  d.labels["hub"] = {hub};
  d.labels["rim"] = rim;
  return d.finish();
}

PlaneGraph subdivided_wheel(const std::vector<int>& spoke_extra, const std::vector<int>& rim_extra) {
  Drawing d;
  const int n = static_cast<int>(spoke_extra.size());
  const double radius = 10.0;
  const Vertex hub = d.add(0, 0);
  std::vector<Vertex> branch;
  for (int i = 0; i < n; ++i) {
    auto [x, y] = polar(radius, -kTau * i / n);
    branch.push_back(d.add(x, y));
  }
  std::vector<Vertex> outer;
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> spoke;
    const double theta = -kTau * i / n;
    for (int k = 1; k <= spoke_extra[i]; ++k) {
      auto [x, y] = polar(radius * k / (spoke_extra[i] + 1), theta);
      spoke.push_back(d.add(x, y));
    }
    std::vector<Vertex> chain{hub};
    chain.insert(chain.end(), spoke.begin(), spoke.end());
    chain.push_back(branch[i]);
    d.join_path(chain);
    d.labels["spoke[" + std::to_string(i) + "]"] = spoke;

    std::vector<Vertex> rim;
    for (int k = 1; k <= rim_extra[i]; ++k) {
      const double t = theta - (kTau / n) * k / (rim_extra[i] + 1);
      auto [x, y] = polar(radius, t);
      rim.push_back(d.add(x, y));
    }
    std::vector<Vertex> arc{branch[i]};
    arc.insert(arc.end(), rim.begin(), rim.end());
    arc.push_back(branch[(i + 1) % n]);
    d.join_path(arc);
    d.labels["rim[" + std::to_string(i) + "]"] = rim;
    outer.push_back(branch[i]);
    outer.insert(outer.end(), rim.begin(), rim.end());
  }
  d.labels["hub"] = {hub};
  d.labels["branch"] = branch;
  d.labels["outer"] = outer;
  return d.finish();
}

PlaneGraph grid(int rows, int cols) {
  Drawing d;
  std::vector<std::vector<Vertex>> at(rows, std::vector<Vertex>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) at[i][j] = d.add(j, -i);
  }
  for (int i = 0; i < rows; ++i) {
    d.join_path(at[i]);
    d.labels["row[" + std::to_string(i) + "]"] = at[i];
  }
  for (int j = 0; j < cols; ++j) {
    for (int i = 1; i < rows; ++i) d.join(at[i - 1][j], at[i][j]);
  }
  std::vector<Vertex> outer;
  for (int j = 0; j < cols; ++j) outer.push_back(at[0][j]);
  for (int i = 1; i < rows; ++i) outer.push_back(at[i][cols - 1]);
  for (int j = cols - 2; j >= 0; --j) outer.push_back(at[rows - 1][j]);
  for (int i = rows - 2; i >= 1; --i) outer.push_back(at[i][0]);
  d.labels["outer"] = outer;
  return d.finish();
}

// Two parallel paths, v above u, aligned by column.
struct Rails {
  std::vector<Vertex> v, u;
};

Rails two_rails(Drawing& d, int count) {
  Rails r;
  for (int i = 0; i < count; ++i) r.v.push_back(d.add(i, 1));
  for (int i = 0; i < count; ++i) r.u.push_back(d.add(i, 0));
  d.join_path(r.v);
  d.join_path(r.u);
  return r;
}

PlaneGraph ladder(int n) {
  Drawing d;
  Rails r = two_rails(d, n);
  for (int i = 0; i < n; ++i) d.join(r.u[i], r.v[i]);
  d.labels["rail-v"] = r.v;
  d.labels["rail-u"] = r.u;
  return d.finish();
}

PlaneGraph pendant_ladder(int n) {
  Drawing d;
  Rails r = two_rails(d, n + 2);
  for (int i = 1; i <= n; ++i) d.join(r.u[i], r.v[i]);
  d.labels["rail-v"] = r.v;
  d.labels["rail-u"] = r.u;
  return d.finish();
}

PlaneGraph apic(int n) {
  Drawing d;
  Rails r = two_rails(d, n);
  for (int i = 0; i < n; ++i) d.join(r.u[i], r.v[i]);
  for (int i = 0; i + 1 < n; ++i) d.join(r.u[i], r.v[i + 1]);
  d.labels["rail-v"] = r.v;
  d.labels["rail-u"] = r.u;
  return d.finish();
}

PlaneGraph prism(int n) {
  Drawing d;
  std::vector<Vertex> v, u;
  for (int i = 0; i < n; ++i) {
    auto [x, y] = polar(2.0, -kTau * i / n);
    v.push_back(d.add(x, y));
  }
  for (int i = 0; i < n; ++i) {
    auto [x, y] = polar(1.0, -kTau * i / n);
    u.push_back(d.add(x, y));
  }
  d.join_cycle(v);
  d.join_cycle(u);
  for (int i = 0; i < n; ++i) d.join(u[i], v[i]);
  d.labels["rail-v"] = v;
  d.labels["rail-u"] = u;
  return d.finish();
}

PlaneGraph antiprism(int n) {
  Drawing d;
  std::vector<Vertex> v, u;
  for (int i = 0; i < n; ++i) {
    auto [x, y] = polar(2.0, -kTau * i / n);
    v.push_back(d.add(x, y));
  }
  for (int i = 0; i < n; ++i) {
    auto [x, y] = polar(0.5, -kTau * (i - 0.5) / n);
    u.push_back(d.add(x, y));
  }
  d.join_cycle(v);
  d.join_cycle(u);
  for (int i = 0; i < n; ++i) {
    d.join(u[i], v[(i + n - 1) % n]);
    d.join(u[i], v[i]);
  }
  d.labels["outer"] = v;
  d.labels["inner"] = u;
  return d.finish();
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "path",  "cycle",  "star",           "subdivided-star", "wheel", "subdivided-wheel",
      "grid",  "ladder", "pendant-ladder", "prism",           "apic",  "antiprism"};
  return names;
}

PlaneGraph generate_family(std::string_view family, std::span<const int> p) {
  if (family == "path") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 1, "n");
    return path(p[0]);
  }
  if (family == "cycle") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 3, "n");
    return cycle(p[0]);
  }
  if (family == "star") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 1, "n");
    return star(p[0]);
  }
  if (family == "subdivided-star") {
    if (p.empty()) bad(family, "missing n");
    need_at_least(family, p[0], 1, "n");
    const auto n = static_cast<std::size_t>(p[0]);
    std::vector<int> extra;
    if (p.size() == 2) {
      extra.assign(n, p[1]);
    } else if (p.size() == n + 1) {
      extra.assign(p.begin() + 1, p.end());
    } else {
      bad(family, "expected n k or n k_1..k_n");
    }
    for (int k : extra) need_at_least(family, k, 0, "subdivision count");
    return subdivided_star(extra);
  }
  if (family == "wheel") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 3, "n");
    return wheel(p[0]);
  }
  if (family == "subdivided-wheel") {
    if (p.empty()) bad(family, "missing n");
    need_at_least(family, p[0], 3, "n");
    const auto n = static_cast<std::size_t>(p[0]);
    std::vector<int> spokes, rims;
    if (p.size() == 3) {
      spokes.assign(n, p[1]);
      rims.assign(n, p[2]);
    } else if (p.size() == 2 * n + 1) {
      spokes.assign(p.begin() + 1, p.begin() + 1 + static_cast<long>(n));
      rims.assign(p.begin() + 1 + static_cast<long>(n), p.end());
    } else {
      bad(family, "expected n s r or n s_1..s_n r_1..r_n");
    }
    for (int k : spokes) need_at_least(family, k, 0, "spoke subdivision");
    for (int k : rims) need_at_least(family, k, 0, "rim subdivision");
    return subdivided_wheel(spokes, rims);
  }
  if (family == "grid") {
    need_count(family, p, 2);
    need_at_least(family, p[0], 3, "n");
    need_at_least(family, p[1], 3, "m");
    return grid(p[0], p[1]);
  }
  if (family == "ladder") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 2, "n");
    return ladder(p[0]);
  }
  if (family == "pendant-ladder") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 2, "n");
    return pendant_ladder(p[0]);
  }
  if (family == "prism") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 3, "n");
    return prism(p[0]);
  }
  if (family == "apic") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 3, "n");
    return apic(p[0]);
  }
  if (family == "antiprism") {
    need_count(family, p, 1);
    need_at_least(family, p[0], 3, "n");
    return antiprism(p[0]);
  }
  bad(family, "unknown family");
}

}  // namespace thue
