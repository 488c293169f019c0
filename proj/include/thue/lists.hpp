#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "thue/repetition.hpp"

namespace thue {

/// Seeded source of uniform list indices. The engine is std::mt19937_64,
/// whose output sequence is fixed by the C++ standard; indices are drawn by
/// rejection so every value in [1, l] is exactly equally likely.
class IndexSource {
 public:
  explicit IndexSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [1, l]; l must be positive.
  std::size_t index(std::size_t l);

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Ordered colour lists. Only the first `l` entries of each list take part
/// in random choices.
struct ListAssignment {
  std::vector<std::vector<Colour>> lists;
  std::size_t l = 0;

  /// Smallest list length.
  std::size_t min_length() const;

  /// Throws Error(BadInput) unless there is one list per vertex, every list
  /// has at least l distinct positive colours, and l >= 1.
  void validate(std::size_t n) const;

  bool operator==(const ListAssignment&) const = default;
};

/// Every vertex gets (1, 2, ..., l).
ListAssignment identical_lists(std::size_t n, std::size_t l);

/// Every vertex gets l distinct colours drawn uniformly from [1, universe],
/// in random order.
ListAssignment random_lists(std::size_t n, std::size_t l, std::size_t universe, std::uint64_t seed);

}  // namespace thue
