#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "thue/lists.hpp"
#include "thue/plane_graph.hpp"
#include "thue/repetition.hpp"

namespace thue {

/// Hard caps checked before any search starts.
struct OracleBudget {
  std::size_t max_vertices = 12;
  std::size_t max_colours = 6;
  std::size_t max_universe = 64;  // distinct colours over all lists
  std::uint64_t max_expansions = 100'000'000;
};

struct FeasibilityResult {
  std::optional<PartialColouring> witness;  // nullopt: search exhausted
  std::uint64_t nodes_expanded = 0;

  bool feasible() const { return witness.has_value(); }
};

/// Smallest k <= k_max admitting a facial non-repetitive colouring with
/// colours 1..k; k is nullopt when none does.
struct PiResult {
  std::optional<std::size_t> k;
  std::size_t k_max = 0;
  PartialColouring witness;
  std::uint64_t nodes_expanded = 0;
};

/// Throws Error(BudgetExceeded) outside the budget or when the search runs
/// past max_expansions.
PiResult pi_f_exact(const PlaneGraph& g, std::size_t k_max, const OracleBudget& budget = {});

/// Complete backtracking over the full lists: vertices by id, colours in
/// list order.
FeasibilityResult feasible_for_lists(const PlaneGraph& g, const ListAssignment& lists,
                                     const OracleBudget& budget = {});

struct EcOracleReport {
  bool feasible = false;
  std::size_t runs = 0;
  std::size_t successes = 0;
  std::size_t exhausted = 0;
  std::size_t invalid_outputs = 0;  // engine successes the verifier rejects
  std::size_t contradictions = 0;   // engine success on an infeasible instance
  std::uint64_t nodes_expanded = 0;
};

/// Runs the engine once per seed (step budget `steps`, or the default when
/// 0) and compares the outcomes with feasible_for_lists.
EcOracleReport ec_vs_oracle(const PlaneGraph& g, const ListAssignment& lists,
                            std::span<const std::uint64_t> seeds, std::size_t steps = 0,
                            const OracleBudget& budget = {});

}  // namespace thue
