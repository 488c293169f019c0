#include "thue/repetition.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace thue {

bool is_repetition(std::span<const Colour> seq) {
  if (seq.empty() || seq.size() % 2 != 0) return false;
  const std::size_t half = seq.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if (seq[i] <= 0 || seq[i] != seq[half + i]) return false;
  }
  return true;
}

bool is_nonrepetitive_sequence(std::span<const Colour> seq) {
  const std::size_t n = seq.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t half = 1; start + 2 * half <= n; ++half) {
      bool square = true;
      for (std::size_t i = 0; i < half && square; ++i) {
        square = seq[start + i] == seq[start + half + i];
      }
      if (square) return false;
    }
  }
  return true;
}

namespace {

bool distinct_window(const std::vector<Vertex>& walk, std::size_t start, std::size_t len) {
  std::vector<Vertex> vs;
  vs.reserve(len);
  for (std::size_t i = 0; i < len; ++i) vs.push_back(walk[(start + i) % walk.size()]);
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

// Positions around one occurrence of v that carry positive colours.
struct Reach {
  const std::vector<Vertex>* walk;
  std::size_t position;
  std::size_t back;
  std::size_t fwd;
};

std::vector<Reach> reaches(const PlaneGraph& g, const PartialColouring& c, Vertex v) {
  std::vector<Reach> out;
  for (const Occurrence& occ : g.occurrences(v)) {
    const auto& walk = g.faces()[occ.face].boundary;
    const std::size_t size = walk.size();
    if (size < 2) continue;
    std::size_t back = 0;
    while (back + 1 < size && c[walk[(occ.position + size - back - 1) % size]] > 0) ++back;
    std::size_t fwd = 0;
    while (fwd + 1 < size && c[walk[(occ.position + fwd + 1) % size]] > 0) ++fwd;
    out.push_back({&walk, occ.position, back, fwd});
  }
  return out;
}

// Forward window of length 2h holding v at index `at` is a repetition.
bool repetitive_window(const Reach& r, const PartialColouring& c, std::size_t h, std::size_t at) {
  const auto& walk = *r.walk;
  const std::size_t size = walk.size();
  const std::size_t len = 2 * h;
  if (len > size || at > r.back || len - 1 - at > r.fwd) return false;
  const std::size_t start = (r.position + size - at) % size;
  for (std::size_t i = 0; i < h; ++i) {
    if (c[walk[(start + i) % size]] != c[walk[(start + h + i) % size]]) return false;
  }
  return distinct_window(walk, start, len);
}

std::optional<std::pair<std::size_t, std::size_t>> first_level(const PlaneGraph& g,
                                                                const PartialColouring& c,
                                                                Vertex v) {
  if (c[v] <= 0) return std::nullopt;
  const auto rs = reaches(g, c, v);
  std::size_t max_h = 0;
  for (const Reach& r : rs) {
    max_h = std::max(max_h, std::min(r.walk->size() / 2, (r.back + r.fwd + 1) / 2));
  }
  for (std::size_t h = 1; h <= max_h; ++h) {
    for (std::size_t q = 0; q < h; ++q) {
      for (const Reach& r : rs) {
        if (repetitive_window(r, c, h, q) || repetitive_window(r, c, h, 2 * h - 1 - q)) {
          return std::pair{h, q};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> verify_facial_nonrepetitive(const PlaneGraph& g, const PartialColouring& c) {
  std::vector<int> seen(g.vertex_count(), -1);
  int stamp = 0;
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    const auto& walk = g.faces()[f].boundary;
    const std::size_t size = walk.size();
    if (size < 2) continue;
    for (std::size_t s = 0; s < size; ++s) {
      ++stamp;
      for (std::size_t len = 1; len <= size; ++len) {
        const Vertex x = walk[(s + len - 1) % size];
        if (seen[x] == stamp || c[x] <= 0) break;
        seen[x] = stamp;
        if (len % 2 != 0) continue;
        const std::size_t half = len / 2;
        bool rep = true;
        for (std::size_t i = 0; i < half && rep; ++i) {
          rep = c[walk[(s + i) % size]] == c[walk[(s + half + i) % size]];
        }
        if (!rep) continue;
        Violation out{f, s, len, {}, {}};
        for (std::size_t i = 0; i < len; ++i) out.path.push_back(walk[(s + i) % size]);
        for (std::size_t i = 0; i < half; ++i) out.block.push_back(c[out.path[i]]);
        return out;
      }
    }
  }
  return std::nullopt;
}

bool has_repetition_through(const PlaneGraph& g, const PartialColouring& c, Vertex v) {
  return first_level(g, c, v).has_value();
}

std::optional<RepetitionHit> find_repetition_through(const PlaneGraph& g, const PartialColouring& c,
                                                     Vertex v) {
  const auto level = first_level(g, c, v);
  if (!level) return std::nullopt;
  const auto [h, q] = *level;
  auto paths = facial_paths_through(g, v, h, q);
  std::vector<Colour> colours;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    colours.clear();
    for (const Vertex x : paths[i].vertices) colours.push_back(c[x]);
    if (is_repetition(colours)) return RepetitionHit{std::move(paths[i]), h, q, i + 1};
  }
  assert(false && "scan and canonical enumeration disagree");
  return std::nullopt;
}

}  // namespace thue
