#include "thue/oracle.hpp"

#include <set>
#include <string>

#include "thue/engine.hpp"
#include "thue/error.hpp"

namespace thue {

namespace {

void check_vertices(const PlaneGraph& g, const OracleBudget& budget) {
  if (g.vertex_count() > budget.max_vertices) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(g.vertex_count()) + " vertices exceed the cap of " +
                                               std::to_string(budget.max_vertices));
  }
}

class Search {
 public:
  Search(const PlaneGraph& g, const std::vector<std::vector<Colour>>& lists, std::uint64_t cap)
      : g_(g), lists_(lists), cap_(cap), c_(g.vertex_count(), 0) {}

  bool solve(std::size_t v) {
    if (v == c_.size()) return true;
    for (Colour colour : lists_[v]) {
      if (++nodes_ > cap_) throw Error(ErrorCode::BudgetExceeded, "node expansion cap reached");
      c_[v] = colour;
      if (!has_repetition_through(g_, c_, static_cast<Vertex>(v)) && solve(v + 1)) return true;
    }
    c_[v] = 0;
    return false;
  }

  const PartialColouring& colouring() const { return c_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const PlaneGraph& g_;
  const std::vector<std::vector<Colour>>& lists_;
  std::uint64_t cap_;
  PartialColouring c_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

PiResult pi_f_exact(const PlaneGraph& g, std::size_t k_max, const OracleBudget& budget) {
  check_vertices(g, budget);
  if (k_max > budget.max_colours) {
    throw Error(ErrorCode::BudgetExceeded, "k_max exceeds the colour cap");
  }
  PiResult out;
  out.k_max = k_max;
  const std::size_t n = g.vertex_count();
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<Colour> palette;
    for (std::size_t i = 1; i <= k; ++i) palette.push_back(static_cast<Colour>(i));
    const std::vector<std::vector<Colour>> lists(n, palette);
    Search search(g, lists, budget.max_expansions - out.nodes_expanded);
    const bool found = search.solve(0);
    out.nodes_expanded += search.nodes();
    if (found) {
      out.k = k;
      out.witness = search.colouring();
      return out;
    }
  }
  return out;
}

FeasibilityResult feasible_for_lists(const PlaneGraph& g, const ListAssignment& lists,
                                     const OracleBudget& budget) {
  check_vertices(g, budget);
  lists.validate(g.vertex_count());
  std::set<Colour> universe;
  for (const auto& list : lists.lists) universe.insert(list.begin(), list.end());
  if (universe.size() > budget.max_universe) {
    throw Error(ErrorCode::BudgetExceeded, "list universe exceeds the cap");
  }
  Search search(g, lists.lists, budget.max_expansions);
  FeasibilityResult out;
  if (search.solve(0)) out.witness = search.colouring();
  out.nodes_expanded = search.nodes();
  return out;
}

EcOracleReport ec_vs_oracle(const PlaneGraph& g, const ListAssignment& lists,
                            std::span<const std::uint64_t> seeds, std::size_t steps,
                            const OracleBudget& budget) {
  const FeasibilityResult truth = feasible_for_lists(g, lists, budget);
  EcOracleReport report;
  report.feasible = truth.feasible();
  report.nodes_expanded = truth.nodes_expanded;
  const std::size_t t = steps == 0 ? default_step_budget(g) : steps;
  for (std::uint64_t seed : seeds) {
    const RunOutcome outcome = run(g, lists, seed, t);
    ++report.runs;
    if (outcome.status == RunStatus::Exhausted) {
      ++report.exhausted;
      continue;
    }
    ++report.successes;
    if (verify_facial_nonrepetitive(g, outcome.colouring)) ++report.invalid_outputs;
    if (!report.feasible) ++report.contradictions;
  }
  return report;
}

}  // namespace thue
