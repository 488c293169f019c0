#include "thue/engine.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "thue/error.hpp"

namespace thue {

std::size_t default_step_budget(const PlaneGraph& g) {
  return 64 * g.vertex_count() * std::max<std::size_t>(1, g.max_degree());
}

RunOutcome run_with(const PlaneGraph& g, const ListAssignment& lists, std::size_t budget,
                    const std::function<std::size_t()>& draw) {
  const std::size_t n = g.vertex_count();
  lists.validate(n);
  RunOutcome out;
  out.colouring.assign(n, 0);
  out.record.budget = budget;

  std::set<Vertex> uncoloured;
  for (std::size_t v = 0; v < n; ++v) uncoloured.insert(static_cast<Vertex>(v));

  while (!uncoloured.empty() && out.steps < budget) {
    const Vertex v = *uncoloured.begin();
    const std::size_t idx = draw();
    out.draws.push_back(idx);
    out.colouring[v] = lists.lists[v][idx - 1];
    ++out.steps;
    if (auto hit = find_repetition_through(g, out.colouring, v)) {
      for (std::size_t p = 0; p < hit->h; ++p) {
        const Vertex x = hit->path.vertices[p];
        out.colouring[x] = 0;
        uncoloured.insert(x);
      }
      out.record.entries.emplace_back(PathCode{hit->h, hit->q, hit->o});
    } else {
      uncoloured.erase(v);
      out.record.entries.emplace_back(std::nullopt);
    }
  }
  out.status = uncoloured.empty() ? RunStatus::Success : RunStatus::Exhausted;
  return out;
}

RunOutcome run(const PlaneGraph& g, const ListAssignment& lists, std::uint64_t seed,
               std::size_t budget) {
  IndexSource source(seed);
  const std::size_t l = lists.l;
  RunOutcome out = run_with(g, lists, budget, [&] { return source.index(l); });
  out.seed = seed;
  return out;
}

PathCode encode(const PlaneGraph& g, Vertex v, const FacialPath& path) {
  const std::size_t len = path.size();
  const auto at = std::find(path.vertices.begin(), path.vertices.end(), v);
  if (len == 0 || len % 2 != 0 || at == path.vertices.end()) {
    throw Error(ErrorCode::PathNotCanonical, "path must have even order and contain v");
  }
  const std::size_t h = len / 2;
  const auto q = static_cast<std::size_t>(at - path.vertices.begin());
  if (q >= h) throw Error(ErrorCode::PathNotCanonical, "v must lie in the first half of the path");
  const auto candidates = facial_paths_through(g, v, h, q);
  const auto it = std::find(candidates.begin(), candidates.end(), path);
  if (it == candidates.end()) {
    throw Error(ErrorCode::PathNotCanonical, "path is not a facial path through v");
  }
  return PathCode{h, q, static_cast<std::size_t>(it - candidates.begin()) + 1};
}

FacialPath decode(const PlaneGraph& g, Vertex v, const PathCode& code) {
  auto candidates = facial_paths_through(g, v, code.h, code.q);
  if (code.o == 0 || code.o > candidates.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "o = " + std::to_string(code.o) + " with " + std::to_string(candidates.size()) +
                    " candidate paths");
  }
  return std::move(candidates[code.o - 1]);
}

namespace {

[[noreturn]] void inconsistent(std::size_t step, const std::string& why) {
  throw Error(ErrorCode::Inconsistent, "step " + std::to_string(step + 1) + ": " + why);
}

std::size_t index_in_list(const ListAssignment& lists, Vertex v, Colour colour, std::size_t step) {
  const auto& list = lists.lists[v];
  const auto end = list.begin() + static_cast<long>(lists.l);
  const auto it = std::find(list.begin(), end, colour);
  if (colour <= 0 || it == end) {
    inconsistent(step, "colour " + std::to_string(colour) + " is not among the first l entries of L(" +
                           std::to_string(v) + ")");
  }
  return static_cast<std::size_t>(it - list.begin()) + 1;
}

}  // namespace

std::vector<std::size_t> reconstruct(const PlaneGraph& g, const ListAssignment& lists,
                                     const Record& record, const PartialColouring& final_colouring) {
  const std::size_t n = g.vertex_count();
  lists.validate(n);
  if (final_colouring.size() != n) {
    throw Error(ErrorCode::Inconsistent, "colouring has the wrong number of vertices");
  }
  const auto& entries = record.entries;
  const std::size_t steps = entries.size();
  if (steps > record.budget) throw Error(ErrorCode::Inconsistent, "record longer than its budget");

  // Left to right: who was coloured at each step, and which path each
  // non-empty entry names.
  std::set<Vertex> pending;
  for (std::size_t v = 0; v < n; ++v) pending.insert(static_cast<Vertex>(v));
  std::vector<Vertex> coloured_at(steps);
  std::vector<FacialPath> erased(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    if (pending.empty()) inconsistent(t, "all vertices were already coloured");
    const Vertex j = *pending.begin();
    coloured_at[t] = j;
    if (!entries[t]) {
      pending.erase(j);
      continue;
    }
    const PathCode& code = *entries[t];
    if (code.h == 0 || code.q >= code.h) inconsistent(t, "entry violates q < h");
    try {
      erased[t] = decode(g, j, code);
    } catch (const Error& e) {
      inconsistent(t, e.what());
    }
    const auto& path = erased[t].vertices;
    for (std::size_t p = 0; p < path.size(); ++p) {
      if (path[p] != j && pending.contains(path[p])) {
        inconsistent(t, "decoded path runs through an uncoloured vertex");
      }
    }
    pending.insert(path.begin(), path.begin() + static_cast<long>(code.h));
  }
  for (std::size_t v = 0; v < n; ++v) {
    const bool blank = final_colouring[v] == 0;
    if (blank != pending.contains(static_cast<Vertex>(v))) {
      throw Error(ErrorCode::Inconsistent,
                  "uncoloured vertices of the colouring do not match the record");
    }
  }
  if (steps < record.budget && !pending.empty()) {
    throw Error(ErrorCode::Inconsistent, "run stopped early with uncoloured vertices");
  }

  // Right to left: roll the colouring back and read off each draw.
  PartialColouring c = final_colouring;
  std::vector<std::size_t> draws(steps);
  for (std::size_t t = steps; t-- > 0;) {
    const Vertex j = coloured_at[t];
    if (!entries[t]) {
      draws[t] = index_in_list(lists, j, c[j], t);
      c[j] = 0;
      continue;
    }
    const std::size_t h = entries[t]->h;
    const std::size_t q = entries[t]->q;
    const auto& path = erased[t].vertices;
    for (std::size_t p = 0; p < h; ++p) {
      if (c[path[p]] != 0) inconsistent(t, "erased half is coloured");
      if (c[path[p + h]] <= 0) inconsistent(t, "kept half has an uncoloured vertex");
    }
    draws[t] = index_in_list(lists, j, c[path[q + h]], t);
    for (std::size_t p = 0; p < h; ++p) {
      if (p != q) c[path[p]] = c[path[p + h]];
    }
    c[j] = 0;
  }
  if (std::any_of(c.begin(), c.end(), [](Colour x) { return x != 0; })) {
    throw Error(ErrorCode::Inconsistent, "rollback does not end at the empty colouring");
  }

  std::size_t next = 0;
  const RunOutcome replay = run_with(g, lists, record.budget, [&]() -> std::size_t {
    return next < draws.size() ? draws[next++] : 1;
  });
  if (replay.draws.size() != steps || replay.record.entries != entries ||
      replay.colouring != final_colouring) {
    throw Error(ErrorCode::Inconsistent, "replaying the recovered draws gives a different run");
  }
  return draws;
}

}  // namespace thue
