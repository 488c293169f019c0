#include "thue/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "thue/engine.hpp"
#include "thue/error.hpp"
#include "thue/generators.hpp"

namespace thue {
namespace {

const std::unordered_map<std::string_view, std::size_t>& min_sizes() {
  static const std::unordered_map<std::string_view, std::size_t> table{
      {"path", 4},  {"cycle", 5}, {"star", 2},           {"subdivided-star", 5},
      {"wheel", 6}, {"subdivided-wheel", 8}, {"grid", 5}, {"ladder", 8},
      {"pendant-ladder", 6},    {"prism", 8}, {"apic", 8}, {"antiprism", 7}};
  return table;
}

std::size_t shortest(const ColourLists& lists) {
  std::size_t m = SIZE_MAX;
  for (const auto& l : lists) m = std::min(m, l.size());
  return lists.empty() ? SIZE_MAX : m;
}

void need_lists(const ColourLists& lists, std::size_t minimum, std::string_view who) {
  if (!lists.empty() && shortest(lists) < minimum) {
    throw Error(ErrorCode::ListTooShort, std::string(who) + " needs lists of length >= " +
                                             std::to_string(minimum));
  }
}

void check_instance(const FamilyInstance& inst, std::initializer_list<std::string_view> accepted,
                    std::string_view who, std::size_t minimum) {
  if (std::find(accepted.begin(), accepted.end(), inst.family) == accepted.end()) {
    throw Error(ErrorCode::WrongFamily,
                std::string(who) + " cannot colour family '" + inst.family + "'");
  }
  if (inst.lists.lists.size() != inst.graph.vertex_count()) {
    throw Error(ErrorCode::BadInput, "one list per vertex required");
  }
  need_lists(inst.lists.lists, minimum, who);
}

Colour pick(const std::vector<Colour>& list, IndexSource& rng) {
  if (list.empty()) throw std::logic_error("pick from an empty list");
  return list[rng.index(list.size()) - 1];
}

std::vector<Colour> without(const std::vector<Colour>& list, const std::set<Colour>& banned) {
  std::vector<Colour> out;
  for (Colour c : list) {
    if (!banned.contains(c)) out.push_back(c);
  }
  return out;
}

// Per-vertex working lists plus a record of what each pruning stage forbade.
class Pruner {
 public:
  explicit Pruner(const ColourLists& lists) : lists_(lists), banned_(lists.size()) {}

  void forbid(Vertex v, Colour c, const std::string& stage) {
    if (banned_[v][stage].insert(c).second) {
      auto& worst = max_[stage];
      worst = std::max(worst, banned_[v][stage].size());
    }
  }

  std::vector<Colour> remaining(Vertex v) const {
    std::set<Colour> all;
    for (const auto& [stage, cs] : banned_[v]) all.insert(cs.begin(), cs.end());
    return without(lists_[v], all);
  }

  std::size_t forbidden_count(Vertex v) const {
    std::set<Colour> all;
    for (const auto& [stage, cs] : banned_[v]) all.insert(cs.begin(), cs.end());
    return all.size();
  }

  const std::map<std::string, std::size_t>& maxima() const { return max_; }

 private:
  const ColourLists& lists_;
  std::vector<std::map<std::string, std::set<Colour>>> banned_;
  std::map<std::string, std::size_t> max_;
};

void require_bound(std::size_t count, std::size_t bound, const std::string& what) {
  if (count > bound) {
    throw std::logic_error(what + ": " + std::to_string(count) + " colours removed, bound is " +
                           std::to_string(bound));
  }
}

void assign(PartialColouring& c, const std::vector<Vertex>& vs, const PartialColouring& colours) {
  for (std::size_t i = 0; i < vs.size(); ++i) c[vs[i]] = colours[i];
}

ColourLists gather(const Pruner& pr, const std::vector<Vertex>& vs) {
  ColourLists out;
  for (Vertex v : vs) out.push_back(pr.remaining(v));
  return out;
}

bool ends_with_square(const std::vector<Colour>& seq) {
  const std::size_t n = seq.size();
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    bool square = true;
    for (std::size_t i = 0; i < half && square; ++i) {
      square = seq[n - 2 * half + i] == seq[n - half + i];
    }
    if (square) return true;
  }
  return false;
}

bool extend(const ColourLists& lists, std::vector<Colour>& seq) {
  if (seq.size() == lists.size()) return true;
  for (Colour c : lists[seq.size()]) {
    seq.push_back(c);
    if (!ends_with_square(seq) && extend(lists, seq)) return true;
    seq.pop_back();
  }
  return false;
}

std::uint64_t mix(std::uint64_t x) {
  // splitmix64 finaliser
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::size_t family_min_list_size(std::string_view family) {
  const auto& t = min_sizes();
  auto it = t.find(family);
  if (it == t.end()) throw Error(ErrorCode::WrongFamily, "unknown family '" + std::string(family) + "'");
  return it->second;
}

std::optional<PartialColouring> colour_path_backtracking(const ColourLists& lists) {
  std::vector<Colour> seq;
  if (extend(lists, seq)) return seq;
  return std::nullopt;
}

PartialColouring colour_path(const ColourLists& lists, std::uint64_t seed) {
  need_lists(lists, 4, "colour_path");
  const std::size_t n = lists.size();
  if (n == 0) return {};
  const std::vector<int> params{static_cast<int>(n)};
  const PlaneGraph g = generate_family("path", params);
  const ListAssignment la{lists, shortest(lists)};
  const std::size_t budget = 64 * n;
  constexpr int kAttempts = 64;
  std::uint64_t s = seed;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    s = mix(s);
    RunOutcome out = run(g, la, s, budget);
    if (out.status == RunStatus::Success) return std::move(out.colouring);
  }
  if (n <= 20) {
    if (auto c = colour_path_backtracking(lists)) return *c;
  }
  throw Error(ErrorCode::BudgetExceeded, "path colouring did not finish");
}

PartialColouring colour_cyclic(const ColourLists& lists, std::uint64_t seed) {
  const std::size_t k = lists.size();
  if (k == 0) return {};
  IndexSource rng(seed);
  if (k >= 3) need_lists(lists, 5, "colour_cyclic");
  if (k == 1) return {pick(lists[0], rng)};
  if (k == 2) {
    need_lists(lists, 2, "colour_cyclic");
    const Colour a = pick(lists[0], rng);
    return {a, pick(without(lists[1], {a}), rng)};
  }
  const Colour first = pick(lists[0], rng);
  ColourLists rest;
  for (std::size_t i = 1; i < k; ++i) rest.push_back(without(lists[i], {first}));
  PartialColouring tail = colour_path(rest, rng.raw());
  PartialColouring out{first};
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

FamilyColouring colour_path_family(const FamilyInstance& inst, std::uint64_t seed) {
  check_instance(inst, {"path"}, "colour_path", 4);
  const auto& order = inst.graph.label("path");
  FamilyColouring out;
  out.colouring.assign(inst.graph.vertex_count(), 0);
  ColourLists lists;
  for (Vertex v : order) lists.push_back(inst.lists.lists[v]);
  assign(out.colouring, order, colour_path(lists, seed));
  out.trace.push_back("path: non-repetitive path colouring");
  return out;
}

FamilyColouring colour_cycle(const FamilyInstance& inst, std::uint64_t seed) {
  check_instance(inst, {"cycle"}, "colour_cycle", 5);
  const auto& order = inst.graph.label("cycle");
  FamilyColouring out;
  out.colouring.assign(inst.graph.vertex_count(), 0);
  ColourLists lists;
  for (Vertex v : order) lists.push_back(inst.lists.lists[v]);
  assign(out.colouring, order, colour_cyclic(lists, seed));
  out.trace.push_back("cycle: unique colour on first vertex");
  out.trace.push_back("cycle: remaining path from pruned lists");
  out.max_pruned["cycle"] = 1;
  return out;
}

FamilyColouring colour_unique_hub(const FamilyInstance& inst, std::uint64_t seed) {
  const auto& g = inst.graph;
  const std::size_t minimum = inst.family == "star" ? 2 : inst.family == "wheel" ? 6 : 5;
  check_instance(inst, {"star", "subdivided-star", "wheel"}, "colour_unique_hub", minimum);
  IndexSource rng(seed);
  Pruner pr(inst.lists.lists);
  FamilyColouring out;
  out.colouring.assign(g.vertex_count(), 0);

  const Vertex hub = g.label("hub").at(0);
  const Colour a = pick(inst.lists.lists[hub], rng);
  out.colouring[hub] = a;
  out.trace.push_back("hub: unique colour");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<Vertex>(v) != hub) pr.forbid(static_cast<Vertex>(v), a, "hub");
  }

  if (inst.family == "star") {
    for (Vertex leaf : g.label("leaves")) out.colouring[leaf] = pick(pr.remaining(leaf), rng);
    out.trace.push_back("leaves: any remaining colour");
  } else if (inst.family == "subdivided-star") {
    for (const auto& [role, arm] : g.labels()) {
      if (!role.starts_with("arm[")) continue;
      assign(out.colouring, arm, colour_path(gather(pr, arm), rng.raw()));
    }
    out.trace.push_back("arms: non-repetitive paths from pruned lists");
  } else {
    const auto& rim = g.label("rim");
    assign(out.colouring, rim, colour_cyclic(gather(pr, rim), rng.raw()));
    out.trace.push_back("rim: cycle colouring from pruned lists");
  }
  out.max_pruned = pr.maxima();
  return out;
}

FamilyColouring colour_subdivided_wheel(const FamilyInstance& inst, std::uint64_t seed) {
  check_instance(inst, {"subdivided-wheel", "wheel"}, "colour_subdivided_wheel", 8);
  const auto& g = inst.graph;
  const bool plain = inst.family == "wheel";
  const std::vector<Vertex>& branch = plain ? g.label("rim") : g.label("branch");
  const std::size_t n = branch.size();
  std::vector<std::vector<Vertex>> spokes(n), rims(n);
  if (!plain) {
    for (std::size_t i = 0; i < n; ++i) {
      spokes[i] = g.label("spoke[" + std::to_string(i) + "]");
      rims[i] = g.label("rim[" + std::to_string(i) + "]");
    }
  }
  const std::vector<Vertex>& outer = plain ? g.label("rim") : g.label("outer");

  IndexSource rng(seed);
  Pruner pr(inst.lists.lists);
  FamilyColouring out;
  out.colouring.assign(g.vertex_count(), 0);

  const Vertex hub = g.label("hub").at(0);
  const Colour a = pick(inst.lists.lists[hub], rng);
  out.colouring[hub] = a;
  out.trace.push_back("hub: unique colour, removed from non-branch vertices");
  const std::set<Vertex> branch_set(branch.begin(), branch.end());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto x = static_cast<Vertex>(v);
    if (x != hub && !branch_set.contains(x)) pr.forbid(x, a, "hub");
  }

  // The spoke vertex next to each branch vertex, in cyclic order.
  std::vector<std::size_t> with_u;
  for (std::size_t i = 0; i < n; ++i) {
    if (!spokes[i].empty()) with_u.push_back(i);
  }
  std::vector<Vertex> ring;
  for (std::size_t i : with_u) ring.push_back(spokes[i].back());
  assign(out.colouring, ring, colour_cyclic(gather(pr, ring), rng.raw()));
  out.trace.push_back("spoke ends u_i: cyclically non-repetitive around the hub");

  for (std::size_t i : with_u) {
    const Colour b = out.colouring[spokes[i].back()];
    for (std::size_t d : {n - 1, std::size_t{0}, std::size_t{1}}) {
      const std::size_t j = (i + d) % n;
      for (Vertex x : spokes[j]) {
        if (out.colouring[x] == 0) pr.forbid(x, b, "spoke ends");
      }
      pr.forbid(branch[j], b, "spoke ends");
    }
    for (Vertex x : rims[(i + n - 1) % n]) pr.forbid(x, b, "spoke ends");
    for (Vertex x : rims[i]) pr.forbid(x, b, "spoke ends");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (spokes[i].empty()) pr.forbid(branch[i], a, "hub neighbours");
  }
  out.trace.push_back("prune spoke-end colours along neighbouring spokes and rim segments");

  std::size_t worst_outer = 0;
  for (Vertex x : outer) worst_outer = std::max(worst_outer, pr.forbidden_count(x));
  require_bound(worst_outer, 3, "outer cycle");
  out.max_pruned["outer cycle total"] = worst_outer;
  assign(out.colouring, outer, colour_cyclic(gather(pr, outer), rng.raw()));
  out.trace.push_back("outer cycle: cycle colouring from pruned lists");

  std::size_t worst_spoke = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (spokes[i].size() < 2) continue;
    std::vector<Vertex> inner(spokes[i].begin(), spokes[i].end() - 1);
    for (Vertex x : inner) worst_spoke = std::max(worst_spoke, pr.forbidden_count(x));
    require_bound(worst_spoke, 4, "spoke interior");
    assign(out.colouring, inner, colour_path(gather(pr, inner), rng.raw()));
  }
  out.max_pruned["spoke interior total"] = worst_spoke;
  out.trace.push_back("spoke interiors: non-repetitive paths from pruned lists");
  for (const auto& [stage, m] : pr.maxima()) out.max_pruned[stage] = m;
  return out;
}

FamilyColouring colour_grid(const FamilyInstance& inst, std::uint64_t seed) {
  check_instance(inst, {"grid"}, "colour_grid", 5);
  const auto& g = inst.graph;
  std::vector<std::vector<Vertex>> rows;
  while (g.has_label("row[" + std::to_string(rows.size()) + "]")) {
    rows.push_back(g.label("row[" + std::to_string(rows.size()) + "]"));
  }
  if (rows.size() < 3 || rows.front().size() < 3) {
    throw Error(ErrorCode::WrongFamily, "colour_grid needs at least 3 rows and 3 columns");
  }
  const auto& outer = g.label("outer");
  const std::set<Vertex> on_outer(outer.begin(), outer.end());

  // v: lowest-id outer vertex of degree 3 with a degree-2 neighbour and a
  // degree-4 neighbour u.
  Vertex v = -1, u = -1;
  for (std::size_t x = 0; x < g.vertex_count() && v < 0; ++x) {
    const auto cand = static_cast<Vertex>(x);
    if (!on_outer.contains(cand) || g.degree(cand) != 3) continue;
    Vertex cw = -1, cu = -1;
    for (Vertex y : g.neighbours(cand)) {
      if (g.degree(y) == 2 && (cw < 0 || y < cw)) cw = y;
      if (g.degree(y) == 4 && (cu < 0 || y < cu)) cu = y;
    }
    if (cw >= 0 && cu >= 0) {
      v = cand;
      u = cu;
    }
  }

  IndexSource rng(seed);
  Pruner pr(inst.lists.lists);
  FamilyColouring out;
  out.colouring.assign(g.vertex_count(), 0);
  PartialColouring& c = out.colouring;

  c[v] = pick(inst.lists.lists[v], rng);
  out.trace.push_back("v: unique colour on the outer cycle");
  const auto pos = static_cast<std::size_t>(std::find(outer.begin(), outer.end(), v) - outer.begin());
  std::vector<Vertex> rest;
  for (std::size_t k = 1; k < outer.size(); ++k) rest.push_back(outer[(pos + k) % outer.size()]);
  for (Vertex x : rest) pr.forbid(x, c[v], "outer");
  assign(c, rest, colour_path(gather(pr, rest), rng.raw()));
  out.trace.push_back("outer cycle minus v: non-repetitive path");

  // Boustrophedon over the interior from its corner u, walked backwards so
  // that u comes last.
  std::vector<Vertex> q_path;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    std::vector<Vertex> line(rows[i].begin() + 1, rows[i].end() - 1);
    if ((i - 1) % 2 == 1) std::reverse(line.begin(), line.end());
    q_path.insert(q_path.end(), line.begin(), line.end());
  }
  if (q_path.front() != u) throw std::logic_error("interior walk does not start at u");
  std::reverse(q_path.begin(), q_path.end());

  std::size_t worst_inner = 0, worst_u = 0;
  for (Vertex x : q_path) {
    std::set<Colour> banned;
    for (Vertex y : g.neighbours(x)) {
      if (c[y] > 0) banned.insert(c[y]);
    }
    for (const Occurrence& occ : g.occurrences(x)) {
      const auto& walk = g.faces()[occ.face].boundary;
      if (walk.size() != 4) continue;
      const Vertex before = walk[(occ.position + 3) % 4];
      const Vertex opposite = walk[(occ.position + 2) % 4];
      const Vertex after = walk[(occ.position + 1) % 4];
      if (c[before] > 0 && c[before] == c[after] && c[opposite] > 0) banned.insert(c[opposite]);
    }
    if (x == u) {
      worst_u = banned.size();
      require_bound(banned.size(), 4, "grid vertex u");
    } else {
      worst_inner = std::max(worst_inner, banned.size());
      require_bound(banned.size(), 3, "grid interior vertex");
    }
    c[x] = pick(without(inst.lists.lists[x], banned), rng);
  }
  out.trace.push_back("interior along Q: avoid neighbour colours and ABAB quadrilaterals");
  out.trace.push_back("u: last vertex of Q");
  out.max_pruned = pr.maxima();
  out.max_pruned["interior"] = worst_inner;
  out.max_pruned["u"] = worst_u;
  return out;
}

FamilyColouring colour_two_rail(const FamilyInstance& inst, std::uint64_t seed) {
  const std::size_t minimum = inst.family == "pendant-ladder" ? 6 : 8;
  check_instance(inst, {"ladder", "pendant-ladder", "prism", "apic"}, "colour_two_rail", minimum);
  const auto& g = inst.graph;
  const auto& rv = g.label("rail-v");
  const auto& ru = g.label("rail-u");
  const std::size_t n = rv.size();

  IndexSource rng(seed);
  Pruner pr(inst.lists.lists);
  FamilyColouring out;
  out.colouring.assign(g.vertex_count(), 0);
  PartialColouring& c = out.colouring;

  std::vector<Vertex> path_v, path_u;
  std::size_t pruned_u = 0;  // u[0..pruned_u) take partner colours
  if (inst.family == "pendant-ladder") {
    path_v = rv;
    path_u = ru;
    pruned_u = n - 1;
  } else {
    const Vertex first_v = rv.front();
    const Vertex last_u = ru.back();
    c[first_v] = pick(inst.lists.lists[first_v], rng);
    c[last_u] = pick(without(inst.lists.lists[last_u], {c[first_v]}), rng);
    out.trace.push_back("end vertices v_1, u_n: two distinct unique colours");
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      const auto y = static_cast<Vertex>(x);
      if (y == first_v || y == last_u) continue;
      pr.forbid(y, c[first_v], "ends");
      pr.forbid(y, c[last_u], "ends");
    }
    path_v.assign(rv.begin() + 1, rv.end());
    path_u.assign(ru.begin(), ru.end() - 1);
    pruned_u = n - 1;
  }
  assign(c, path_v, colour_path(gather(pr, path_v), rng.raw()));
  out.trace.push_back("rail v: non-repetitive path");
  for (std::size_t i = 0; i < pruned_u; ++i) {
    pr.forbid(ru[i], c[rv[i]], "rail partners");
    pr.forbid(ru[i], c[rv[i + 1]], "rail partners");
  }
  out.trace.push_back("rail u: remove colours of v_i and v_{i+1}");
  assign(c, path_u, colour_path(gather(pr, path_u), rng.raw()));
  out.trace.push_back("rail u: non-repetitive path");
  out.max_pruned = pr.maxima();
  return out;
}

FamilyColouring colour_antiprism(const FamilyInstance& inst, std::uint64_t seed) {
  check_instance(inst, {"antiprism"}, "colour_antiprism", 7);
  const auto& g = inst.graph;
  const auto& outer = g.label("outer");
  const auto& inner = g.label("inner");
  const std::set<Vertex> outer_set(outer.begin(), outer.end());

  IndexSource rng(seed);
  Pruner pr(inst.lists.lists);
  FamilyColouring out;
  out.colouring.assign(g.vertex_count(), 0);
  PartialColouring& c = out.colouring;

  assign(c, outer, colour_cyclic(gather(pr, outer), rng.raw()));
  out.trace.push_back("outer cycle: cycle colouring");
  for (Vertex x : inner) {
    for (Vertex y : g.neighbours(x)) {
      if (outer_set.contains(y)) pr.forbid(x, c[y], "outer neighbours");
    }
  }
  const auto& m = pr.maxima();
  if (auto it = m.find("outer neighbours"); it != m.end()) {
    require_bound(it->second, 2, "antiprism inner ring");
  }
  out.trace.push_back("inner ring: remove the two adjacent outer colours");
  assign(c, inner, colour_cyclic(gather(pr, inner), rng.raw()));
  out.trace.push_back("inner cycle: cycle colouring from pruned lists");
  out.max_pruned = pr.maxima();
  return out;
}

FamilyColouring colour_family(const FamilyInstance& inst, std::uint64_t seed) {
  const std::string& f = inst.family;
  if (f == "path") return colour_path_family(inst, seed);
  if (f == "cycle") return colour_cycle(inst, seed);
  if (f == "star" || f == "subdivided-star" || f == "wheel") return colour_unique_hub(inst, seed);
  if (f == "subdivided-wheel") return colour_subdivided_wheel(inst, seed);
  if (f == "grid") return colour_grid(inst, seed);
  if (f == "ladder" || f == "pendant-ladder" || f == "prism" || f == "apic") {
    return colour_two_rail(inst, seed);
  }
  if (f == "antiprism") return colour_antiprism(inst, seed);
  throw Error(ErrorCode::WrongFamily, "no colourer for family '" + f + "'");
}

ConcatCheck nonrep_seq_concat_check(std::span<const Colour> a, const std::vector<std::vector<Colour>>& blocks,
                                    std::span<const std::size_t> cuts) {
  if (blocks.size() != cuts.size() + 2) {
    throw Error(ErrorCode::BadInput, "need exactly cuts + 2 blocks");
  }
  ConcatCheck out;
  std::size_t from = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.sequence.insert(out.sequence.end(), blocks[i].begin(), blocks[i].end());
    if (i + 1 == blocks.size()) break;
    const std::size_t to = i < cuts.size() ? std::min(cuts[i], a.size()) : a.size();
    out.sequence.insert(out.sequence.end(), a.begin() + static_cast<long>(from),
                        a.begin() + static_cast<long>(std::max(from, to)));
    from = std::max(from, to);
  }
  std::set<Colour> alpha(a.begin(), a.end());
  bool disjoint = true, blocks_ok = true;
  for (const auto& b : blocks) {
    blocks_ok = blocks_ok && is_nonrepetitive_sequence(b);
    for (Colour x : b) disjoint = disjoint && !alpha.contains(x);
  }
  out.hypotheses_hold = disjoint && blocks_ok && is_nonrepetitive_sequence(a);
  out.nonrepetitive = is_nonrepetitive_sequence(out.sequence);
  return out;
}

}  // namespace thue
