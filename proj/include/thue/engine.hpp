#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "thue/lists.hpp"
#include "thue/plane_graph.hpp"
#include "thue/repetition.hpp"

namespace thue {

/// Descriptor of an erased repetition: half-length h, offset q of the
/// freshly coloured vertex (q < h) and orientation index o (1-based).
struct PathCode {
  std::size_t h = 0;
  std::size_t q = 0;
  std::size_t o = 0;

  bool operator==(const PathCode&) const = default;
};

/// nullopt is the empty entry of a step that created no repetition.
using RecordEntry = std::optional<PathCode>;

struct Record {
  std::size_t budget = 0;  // T
  std::vector<RecordEntry> entries;

  bool operator==(const Record&) const = default;
};

enum class RunStatus { Success, Exhausted };

struct RunOutcome {
  RunStatus status = RunStatus::Exhausted;
  PartialColouring colouring;
  Record record;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> draws;  // list index chosen at each step, in [1, l]

  bool operator==(const RunOutcome&) const = default;
};

/// 64 * n * max(1, max degree).
std::size_t default_step_budget(const PlaneGraph& g);

/// The entropy-compression colouring loop.
///
/// Each step colours the least-index uncoloured vertex with a uniformly drawn
/// entry among the first l of its list. When that creates a repetitively
/// coloured facial path, the one minimising (h, q, o) is logged and its half
/// containing the new vertex is uncoloured. Stops when every vertex is
/// coloured or after `budget` steps.
RunOutcome run(const PlaneGraph& g, const ListAssignment& lists, std::uint64_t seed,
               std::size_t budget);

/// Same loop with list indices supplied by `draw` (each call must return a
/// value in [1, l]). The returned outcome has seed 0.
RunOutcome run_with(const PlaneGraph& g, const ListAssignment& lists, std::size_t budget,
                    const std::function<std::size_t()>& draw);

/// (h, q, o) of a facial path P of order 2h holding v at index q < h.
/// Throws Error(PathNotCanonical) when P is not in facial_paths_through.
PathCode encode(const PlaneGraph& g, Vertex v, const FacialPath& path);

/// Inverse of encode. Throws Error(IndexOutOfRange) when o is past the end
/// of the candidate list.
FacialPath decode(const PlaneGraph& g, Vertex v, const PathCode& code);

/// Recovers the list indices drawn by the run that produced `record` and
/// `final_colouring`, or throws Error(Inconsistent) when no run could have.
///
/// The uncoloured sets are first replayed left to right from the record
/// alone; the colouring is then rolled back right to left, each step yielding
/// the colour its vertex must have drawn. The recovered draws are replayed
/// forwards and must reproduce the record and the colouring exactly.
std::vector<std::size_t> reconstruct(const PlaneGraph& g, const ListAssignment& lists,
                                     const Record& record, const PartialColouring& final_colouring);

}  // namespace thue
