#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/testkit.hpp"
#include "thue/engine.hpp"
#include "thue/error.hpp"
#include "thue/generators.hpp"
#include "thue/oracle.hpp"

using namespace thue;

namespace {

PlaneGraph gen(const char* fam, std::vector<int> p) { return generate_family(fam, p); }

std::vector<std::uint64_t> seeds(std::size_t n) {
  std::vector<std::uint64_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = i;
  return s;
}

// Exhaustive k-colourings checked by the naive facial checker.
bool naive_k_colourable(const PlaneGraph& g, int k) {
  const std::size_t n = g.vertex_count();
  std::vector<Colour> c(n, 1);
  while (true) {
    if (!testkit::naive_has_facial_repetition(g, c)) return true;
    std::size_t i = 0;
    while (i < n && c[i] == k) c[i++] = 1;
    if (i == n) return false;
    ++c[i];
  }
}

}  // namespace

TEST_CASE("path anchors") {
  const std::vector<std::size_t> want{1, 2, 2, 3, 3, 3, 3};
  for (int n = 1; n <= 7; ++n) {
    const auto r = pi_f_exact(gen("path", {n}), 5);
    REQUIRE(r.k);
    CHECK(*r.k == want[n - 1]);
    CHECK_FALSE(verify_facial_nonrepetitive(gen("path", {n}), r.witness));
  }
}

TEST_CASE("cycle anchors") {
  const std::map<int, std::size_t> want{{3, 3}, {4, 3}, {5, 4}, {6, 3}, {7, 4}, {8, 3}, {9, 4}, {10, 4}, {11, 3}, {12, 3}};
  for (const auto& [n, k] : want) {
    const auto r = pi_f_exact(gen("cycle", {n}), 5);
    CAPTURE(n);
    REQUIRE(r.k);
    CHECK(*r.k == k);
  }
}

TEST_CASE("pi_f_exact matches an exhaustive naive search") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 25; ++t) {
    const auto g = testkit::random_plane_graph(2 + t % 6, 0.7, rng);
    const auto r = pi_f_exact(g, 4);
    REQUIRE(r.k);
    CHECK_FALSE(verify_facial_nonrepetitive(g, r.witness));
    CHECK(naive_k_colourable(g, static_cast<int>(*r.k)));
    if (*r.k > 1) CHECK_FALSE(naive_k_colourable(g, static_cast<int>(*r.k) - 1));
  }
}

TEST_CASE("feasibility is monotone in k") {
  const auto g = gen("cycle", {5});
  CHECK_FALSE(pi_f_exact(g, 3).k);
  CHECK(pi_f_exact(g, 4).k == 4u);
  CHECK(pi_f_exact(g, 5).k == 4u);
}

TEST_CASE("list feasibility") {
  const auto p2 = gen("path", {2});
  CHECK_FALSE(feasible_for_lists(p2, ListAssignment{{{1}, {1}}, 1}).feasible());
  const auto ok = feasible_for_lists(p2, ListAssignment{{{1}, {1, 2}}, 1});
  REQUIRE(ok.feasible());
  CHECK(*ok.witness == PartialColouring{1, 2});
  std::mt19937_64 rng(8);
  for (int t = 0; t < 1000; ++t) {
    const auto g = testkit::random_plane_graph(2 + t % 7, 0.7, rng);
    const auto l = random_lists(g.vertex_count(), 1 + t % 3, 4, t);
    const auto r = feasible_for_lists(g, l);
    if (r.feasible()) {
      CHECK_FALSE(verify_facial_nonrepetitive(g, *r.witness));
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        CHECK(std::find(l.lists[v].begin(), l.lists[v].end(), (*r.witness)[v]) != l.lists[v].end());
      }
    }
  }
}

TEST_CASE("budget caps") {
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadInput;
  };
  CHECK(code([] { pi_f_exact(gen("path", {13}), 3); }) == ErrorCode::BudgetExceeded);
  CHECK(code([] { pi_f_exact(gen("path", {4}), 7); }) == ErrorCode::BudgetExceeded);
  OracleBudget tiny;
  tiny.max_expansions = 5;
  CHECK(code([&] { pi_f_exact(gen("cycle", {5}), 4, tiny); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("engine against oracle") {
  const auto p2 = gen("path", {2});
  const auto s50 = seeds(50);
  const auto bad = ec_vs_oracle(p2, ListAssignment{{{1}, {1}}, 1}, s50);
  CHECK_FALSE(bad.feasible);
  CHECK(bad.exhausted == 50);
  CHECK(bad.contradictions == 0);
  const auto c5 = ec_vs_oracle(gen("cycle", {5}), identical_lists(5, 5), s50);
  CHECK(c5.feasible);
  CHECK(c5.successes == 50);
  CHECK(c5.contradictions == 0);
  CHECK(c5.invalid_outputs == 0);
  std::mt19937_64 rng(13);
  const auto s20 = seeds(20);
  for (int t = 0; t < 20; ++t) {
    const auto g = testkit::random_plane_graph(4 + t % 5, 0.7, rng);
    const std::size_t l = 5 * std::max<std::size_t>(1, g.max_degree());
    const auto r = ec_vs_oracle(g, random_lists(g.vertex_count(), l, l + 5, t), s20);
    CHECK(r.contradictions == 0);
    CHECK(r.invalid_outputs == 0);
  }
}
