#include "thue/plane_graph.hpp"

#include <algorithm>
#include <tuple>

#include "thue/error.hpp"

namespace thue {

PlaneGraph::PlaneGraph(std::size_t n, std::vector<std::vector<Vertex>> rotation, Labels labels)
    : rotation_(std::move(rotation)), labels_(std::move(labels)) {
  if (rotation_.size() != n) {
    throw Error(ErrorCode::BadVertex, "rotation has " + std::to_string(rotation_.size()) +
                                          " entries for n = " + std::to_string(n));
  }
  index_.resize(n);
  std::size_t darts = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& idx = index_[v];
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      const Vertex u = rotation_[v][i];
      if (u < 0 || static_cast<std::size_t>(u) >= n) {
        throw Error(ErrorCode::BadVertex,
                    "neighbour " + std::to_string(u) + " of vertex " + std::to_string(v));
      }
      if (static_cast<std::size_t>(u) == v) {
        throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(v));
      }
      idx.emplace_back(u, i);
    }
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 1; i < idx.size(); ++i) {
      if (idx[i].first == idx[i - 1].first) {
        throw Error(ErrorCode::DuplicateNeighbour, "vertex " + std::to_string(v) + " lists " +
                                                       std::to_string(idx[i].first) + " twice");
      }
    }
    darts += idx.size();
    max_degree_ = std::max(max_degree_, idx.size());
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (const Vertex u : rotation_[v]) {
      if (!adjacent(u, static_cast<Vertex>(v))) {
        throw Error(ErrorCode::AsymmetricRotation, std::to_string(v) + " lists " +
                                                       std::to_string(u) + " but not conversely");
      }
    }
  }
  edge_count_ = darts / 2;
  find_components();
  trace_faces();
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
  const auto& idx = index_[u];
  auto it = std::lower_bound(idx.begin(), idx.end(), std::pair<Vertex, std::size_t>{v, 0});
  return it != idx.end() && it->first == v;
}

std::size_t PlaneGraph::rotation_index(Vertex v, Vertex u) const {
  const auto& idx = index_[v];
  auto it = std::lower_bound(idx.begin(), idx.end(), std::pair<Vertex, std::size_t>{u, 0});
  return it->second;
}

const std::vector<Vertex>& PlaneGraph::label(const std::string& role) const {
  auto it = labels_.find(role);
  if (it == labels_.end()) throw Error(ErrorCode::WrongFamily, "missing role label '" + role + "'");
  return it->second;
}

void PlaneGraph::find_components() {
  const std::size_t n = rotation_.size();
  component_of_.assign(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (component_of_[s] >= 0) continue;
    const int id = static_cast<int>(components_.size());
    std::vector<Vertex> members{static_cast<Vertex>(s)};
    component_of_[s] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const Vertex u : rotation_[members[k]]) {
        if (component_of_[u] < 0) {
          component_of_[u] = id;
          members.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components_.push_back(std::move(members));
  }
}

void PlaneGraph::trace_faces() {
  const std::size_t n = rotation_.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + rotation_[v].size();
  std::vector<char> used(offset[n], 0);

  for (std::size_t s = 0; s < n; ++s) {
    if (rotation_[s].empty()) {
      faces_.push_back(Face{{static_cast<Vertex>(s)}});
      continue;
    }
    for (std::size_t i = 0; i < rotation_[s].size(); ++i) {
      if (used[offset[s] + i]) continue;
      Face face;
      Vertex tail = static_cast<Vertex>(s);
      std::size_t at = i;
      while (!used[offset[tail] + at]) {
        used[offset[tail] + at] = 1;
        face.boundary.push_back(tail);
        const Vertex head = rotation_[tail][at];
        const std::size_t back = rotation_index(head, tail);
        at = (back + 1) % rotation_[head].size();
        tail = head;
      }
      faces_.push_back(std::move(face));
    }
  }

  occurrences_.assign(n, {});
  std::vector<long> faces_per_component(components_.size(), 0);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& b = faces_[f].boundary;
    ++faces_per_component[component_of_[b.front()]];
    for (std::size_t p = 0; p < b.size(); ++p) occurrences_[b[p]].push_back({f, p});
  }
  for (std::size_t c = 0; c < components_.size(); ++c) {
    long edges = 0;
    for (const Vertex v : components_[c]) edges += static_cast<long>(rotation_[v].size());
    edges /= 2;
    const long verts = static_cast<long>(components_[c].size());
    if (verts - edges + faces_per_component[c] != 2) euler_ok_ = false;
  }
}

PlaneGraph build_plane_graph(std::size_t n, std::vector<std::vector<Vertex>> rotation,
                             PlaneGraph::Labels labels) {
  return PlaneGraph(n, std::move(rotation), std::move(labels));
}

std::vector<FacialPath> facial_paths_through(const PlaneGraph& g, Vertex v, std::size_t h,
                                             std::size_t q) {
  std::vector<FacialPath> out;
  if (h == 0 || q >= h) return out;
  const std::size_t len = 2 * h;

  struct Candidate {
    std::size_t face;
    std::size_t start;
    int backward;
    std::vector<Vertex> seq;
  };
  std::vector<Candidate> found;
  std::vector<Vertex> scratch;

  for (const Occurrence& occ : g.occurrences(v)) {
    const auto& b = g.faces()[occ.face].boundary;
    const std::size_t size = b.size();
    if (len > size) continue;
    // Forward read puts v at index q; backward read takes the forward window
    // with v at index 2h-1-q and reverses it.
    for (int backward = 0; backward < 2; ++backward) {
      const std::size_t at = backward ? len - 1 - q : q;
      const std::size_t start = (occ.position + size - at) % size;
      scratch.clear();
      for (std::size_t i = 0; i < len; ++i) scratch.push_back(b[(start + i) % size]);
      std::vector<Vertex> sorted = scratch;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      if (backward) std::reverse(scratch.begin(), scratch.end());
      found.push_back({occ.face, start, backward, scratch});
    }
  }
  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.face, a.start, a.backward) < std::tie(b.face, b.start, b.backward);
  });
  for (auto& c : found) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const FacialPath& p) { return p.vertices == c.seq; });
    if (!seen) out.push_back(FacialPath{std::move(c.seq)});
  }
  return out;
}

}  // namespace thue
