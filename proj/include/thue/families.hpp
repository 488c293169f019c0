#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thue/lists.hpp"
#include "thue/plane_graph.hpp"
#include "thue/repetition.hpp"

namespace thue {

using ColourLists = std::vector<std::vector<Colour>>;

/// A generated family graph with its list assignment.
struct FamilyInstance {
  std::string family;
  PlaneGraph graph;
  ListAssignment lists;
};

/// Output of a deterministic family colourer.
struct FamilyColouring {
  PartialColouring colouring;
  std::vector<std::string> trace;  // construction stages in execution order
  /// Largest number of colours forbidden at any vertex, per pruning stage.
  std::map<std::string, std::size_t> max_pruned;
};

/// Minimum list length each family colourer accepts.
std::size_t family_min_list_size(std::string_view family);

/// Dispatches to the colourer for inst.family. Throws Error(WrongFamily) for
/// unknown tags and Error(ListTooShort) below family_min_list_size.
FamilyColouring colour_family(const FamilyInstance& inst, std::uint64_t seed);

/// Non-repetitive sequence with c[i] from lists[i]; every list needs at
/// least 4 colours. Runs the entropy-compression engine on a path, reseeding
/// on exhaustion, and falls back to colour_path_backtracking for short paths.
PartialColouring colour_path(const ColourLists& lists, std::uint64_t seed);

/// Exhaustive search for a non-repetitive sequence from the lists.
std::optional<PartialColouring> colour_path_backtracking(const ColourLists& lists);

/// Colours a cyclic sequence so that every cyclic window is non-repetitive:
/// the first entry gets a colour that is then removed from the other lists,
/// which are coloured as a path. Needs lists of length >= 5 when there are
/// at least three entries.
PartialColouring colour_cyclic(const ColourLists& lists, std::uint64_t seed);

FamilyColouring colour_path_family(const FamilyInstance& inst, std::uint64_t seed);
FamilyColouring colour_cycle(const FamilyInstance& inst, std::uint64_t seed);
/// Star, subdivided star and wheel: uniquely coloured hub, then each
/// component of the rest.
FamilyColouring colour_unique_hub(const FamilyInstance& inst, std::uint64_t seed);
FamilyColouring colour_subdivided_wheel(const FamilyInstance& inst, std::uint64_t seed);
FamilyColouring colour_grid(const FamilyInstance& inst, std::uint64_t seed);
/// Ladder, pendant ladder, prism and apic graphs.
FamilyColouring colour_two_rail(const FamilyInstance& inst, std::uint64_t seed);
FamilyColouring colour_antiprism(const FamilyInstance& inst, std::uint64_t seed);

/// Result of interleaving blocks B^0..B^r into cuts of A.
struct ConcatCheck {
  std::vector<Colour> sequence;
  bool hypotheses_hold = false;  // A and every block non-repetitive, alphabets disjoint
  bool nonrepetitive = false;
};

/// Builds B^0 A[0, cuts[0]) B^1 A[cuts[0], cuts[1]) ... B^r A[cuts.back(), end)
/// B^{r+1} with blocks.size() == cuts.size() + 2, and checks it for squares.
ConcatCheck nonrep_seq_concat_check(std::span<const Colour> a, const std::vector<std::vector<Colour>>& blocks,
                                    std::span<const std::size_t> cuts);

}  // namespace thue
