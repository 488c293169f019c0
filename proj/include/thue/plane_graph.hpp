#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace thue {

using Vertex = int;

/// Closed boundary walk of one face. Vertices repeat when the walk passes a
/// cut vertex or runs along a bridge. An isolated vertex has the one-vertex
/// walk [v] and no darts.
struct Face {
  std::vector<Vertex> boundary;

  std::size_t dart_count() const { return boundary.size() <= 1 ? 0 : boundary.size(); }
};

/// Pairwise-distinct vertices read consecutively along one face walk, in
/// either direction.
struct FacialPath {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  bool operator==(const FacialPath&) const = default;
};

/// Where a vertex sits on a face walk.
struct Occurrence {
  std::size_t face;
  std::size_t position;
};

/// Plane graph given by a rotation system: rotation[v] lists v's neighbours
/// in clockwise order. Faces are traced once at construction; the object is
/// immutable afterwards.
class PlaneGraph {
 public:
  using Labels = std::map<std::string, std::vector<Vertex>>;

  PlaneGraph() = default;

  /// Validates the rotation system and traces faces. Throws Error with
  /// AsymmetricRotation, LoopEdge, DuplicateNeighbour or BadVertex.
  PlaneGraph(std::size_t n, std::vector<std::vector<Vertex>> rotation, Labels labels = {});

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return rotation_[v].size(); }
  std::size_t max_degree() const { return max_degree_; }

  const std::vector<std::vector<Vertex>>& rotation() const { return rotation_; }
  std::span<const Vertex> neighbours(Vertex v) const { return rotation_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  const Labels& labels() const { return labels_; }
  bool has_label(const std::string& role) const { return labels_.contains(role); }
  /// Throws Error(WrongFamily) when the role is absent.
  const std::vector<Vertex>& label(const std::string& role) const;

  const std::vector<Face>& faces() const { return faces_; }
  /// Every place v occurs on a face walk, ordered by (face, position).
  std::span<const Occurrence> occurrences(Vertex v) const { return occurrences_[v]; }

  /// Connected components as vertex lists, each sorted.
  const std::vector<std::vector<Vertex>>& components() const { return components_; }
  /// n - |E| + |F| == 2 for every component (faces traced per component).
  bool euler_ok() const { return euler_ok_; }

 private:
  std::size_t rotation_index(Vertex v, Vertex u) const;
  void trace_faces();
  void find_components();

  std::vector<std::vector<Vertex>> rotation_;
  Labels labels_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<Face> faces_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::vector<Vertex>> components_;
  std::vector<int> component_of_;
  // Per vertex: (neighbour, index in rotation) sorted by neighbour.
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> index_;
  bool euler_ok_ = true;
};

/// Convenience wrapper matching the graph-building operation.
PlaneGraph build_plane_graph(std::size_t n, std::vector<std::vector<Vertex>> rotation,
                             PlaneGraph::Labels labels = {});

/// Canonical list of facial paths on 2h vertices whose (q+1)-th vertex is v.
///
/// Candidates come from every occurrence of v on every face walk, read
/// forwards and backwards; they are kept when simple, ordered by
/// (face index, window start on that walk, forward before backward) and
/// de-duplicated by vertex sequence. The orientation index o of a path is its
/// 1-based position in this list. Length never exceeds 2 * degree(v).
std::vector<FacialPath> facial_paths_through(const PlaneGraph& g, Vertex v, std::size_t h,
                                             std::size_t q);

}  // namespace thue
