#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "thue/plane_graph.hpp"

namespace thue {

using Colour = int;

/// One colour per vertex; 0 marks an uncoloured vertex.
using PartialColouring = std::vector<Colour>;

/// True iff seq has even length 2n >= 2, all entries positive and
/// seq[i] == seq[n + i] for every i < n.
bool is_repetition(std::span<const Colour> seq);

/// True iff no block of consecutive terms has the form XX. Unlike
/// is_repetition this treats every value as an ordinary symbol.
bool is_nonrepetitive_sequence(std::span<const Colour> seq);

/// A repetitively coloured facial path, located on a face walk.
struct Violation {
  std::size_t face = 0;
  std::size_t start = 0;
  std::size_t length = 0;
  std::vector<Vertex> path;
  std::vector<Colour> block;  // colours of the first half

  bool operator==(const Violation&) const = default;
};

/// Lexicographically first (face, start, length) repetition over all forward
/// windows of all face walks, or nullopt when the colouring is facially
/// non-repetitive.
std::optional<Violation> verify_facial_nonrepetitive(const PlaneGraph& g, const PartialColouring& c);

/// Repetition through a vertex, oriented so the vertex is in the first half.
struct RepetitionHit {
  FacialPath path;
  std::size_t h = 0;
  std::size_t q = 0;
  std::size_t o = 0;
};

/// The repetition through v minimising (h, q, o), where o indexes
/// facial_paths_through(g, v, h, q).
std::optional<RepetitionHit> find_repetition_through(const PlaneGraph& g, const PartialColouring& c,
                                                     Vertex v);

/// Cheaper existence test with the same answer as find_repetition_through.
bool has_repetition_through(const PlaneGraph& g, const PartialColouring& c, Vertex v);

}  // namespace thue
