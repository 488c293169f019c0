#include "thue/lists.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "thue/error.hpp"

namespace thue {

std::size_t IndexSource::index(std::size_t l) {
  const std::uint64_t bound = l;
  // 2^64 mod bound; raw values below it would bias the residue.
  const std::uint64_t reject_below = (0 - bound) % bound;
  std::uint64_t r = engine_();
  while (r < reject_below) r = engine_();
  return static_cast<std::size_t>(r % bound) + 1;
}

std::size_t ListAssignment::min_length() const {
  std::size_t m = std::numeric_limits<std::size_t>::max();
  for (const auto& list : lists) m = std::min(m, list.size());
  return lists.empty() ? 0 : m;
}

void ListAssignment::validate(std::size_t n) const {
  if (lists.size() != n) {
    throw Error(ErrorCode::BadInput, "expected " + std::to_string(n) + " lists, got " +
                                         std::to_string(lists.size()));
  }
  if (l == 0) throw Error(ErrorCode::BadInput, "list size l must be positive");
  for (std::size_t v = 0; v < n; ++v) {
    const auto& list = lists[v];
    if (list.size() < l) {
      throw Error(ErrorCode::BadInput, "list of vertex " + std::to_string(v) + " is shorter than l");
    }
    std::vector<Colour> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() <= 0 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::BadInput,
                  "list of vertex " + std::to_string(v) + " must hold distinct positive colours");
    }
  }
}

ListAssignment identical_lists(std::size_t n, std::size_t l) {
  std::vector<Colour> base(l);
  std::iota(base.begin(), base.end(), 1);
  return ListAssignment{std::vector<std::vector<Colour>>(n, base), l};
}

ListAssignment random_lists(std::size_t n, std::size_t l, std::size_t universe, std::uint64_t seed) {
  if (l == 0 || universe < l) {
    throw Error(ErrorCode::BadInput, "need 1 <= l <= universe");
  }
  IndexSource rng(seed);
  std::vector<Colour> pool(universe);
  std::iota(pool.begin(), pool.end(), 1);
  ListAssignment out{{}, l};
  out.lists.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    // Partial Fisher-Yates over the pool.
    for (std::size_t i = 0; i < l; ++i) {
      const std::size_t j = i + rng.index(universe - i) - 1;
      std::swap(pool[i], pool[j]);
    }
    out.lists.emplace_back(pool.begin(), pool.begin() + static_cast<long>(l));
  }
  return out;
}

}  // namespace thue
