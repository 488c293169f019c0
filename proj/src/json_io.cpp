#include "thue/json_io.hpp"

#include <filesystem>
#include <fstream>

#include "thue/error.hpp"

namespace thue {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::BadInput, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json graph_to_json(const PlaneGraph& g, const std::optional<std::string>& family) {
  Json j;
  j["n"] = g.vertex_count();
  j["rotation"] = g.rotation();
  if (!g.labels().empty()) j["labels"] = g.labels();
  if (family) j["family"] = *family;
  return j;
}

PlaneGraph graph_from_json(const Json& j) {
  auto [n, rotation, labels] = guarded("graph", [&] {
    PlaneGraph::Labels labels;
    if (j.contains("labels")) labels = j.at("labels").get<PlaneGraph::Labels>();
    return std::tuple{j.at("n").get<std::size_t>(), j.at("rotation").get<std::vector<std::vector<Vertex>>>(),
                      std::move(labels)};
  });
  return PlaneGraph(n, std::move(rotation), std::move(labels));
}

std::optional<std::string> family_from_json(const Json& j) {
  return guarded("graph", [&]() -> std::optional<std::string> {
    if (!j.contains("family")) return std::nullopt;
    return j.at("family").get<std::string>();
  });
}

Json colouring_to_json(const PartialColouring& c) { return Json{{"colours", c}}; }

PartialColouring colouring_from_json(const Json& j) {
  auto c = guarded("colouring", [&] { return j.at("colours").get<PartialColouring>(); });
  for (Colour x : c) {
    if (x < 0) throw Error(ErrorCode::BadInput, "colours must be non-negative");
  }
  return c;
}

Json record_to_json(const Record& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    if (e) {
      entries.push_back(Json::array({e->h, e->q, e->o}));
    } else {
      entries.push_back("E");
    }
  }
  return Json{{"T", r.budget}, {"entries", std::move(entries)}};
}

Record record_from_json(const Json& j) {
  return guarded("record", [&] {
    Record r;
    r.budget = j.at("T").get<std::size_t>();
    for (const auto& e : j.at("entries")) {
      if (e.is_string()) {
        if (e.get<std::string>() != "E") throw Error(ErrorCode::BadInput, "unknown record entry");
        r.entries.emplace_back(std::nullopt);
        continue;
      }
      const auto v = e.get<std::vector<std::size_t>>();
      if (v.size() != 3) throw Error(ErrorCode::BadInput, "record entry needs [h, q, o]");
      r.entries.emplace_back(PathCode{v[0], v[1], v[2]});
    }
    return r;
  });
}

Json lists_to_json(const ListAssignment& l) { return Json{{"l", l.l}, {"lists", l.lists}}; }

ListAssignment lists_from_json(const Json& j) {
  return guarded("lists", [&] {
    ListAssignment l;
    l.lists = j.at("lists").get<std::vector<std::vector<Colour>>>();
    if (j.contains("l")) {
      l.l = j.at("l").get<std::size_t>();
    } else {
      l.l = l.min_length();
    }
    return l;
  });
}

Json outcome_to_json(const RunOutcome& o) {
  return Json{{"status", o.status == RunStatus::Success ? "success" : "exhausted"},
              {"colours", o.colouring},
              {"record", record_to_json(o.record)},
              {"steps", o.steps},
              {"seed", o.seed},
              {"draws", o.draws}};
}

RunOutcome outcome_from_json(const Json& j) {
  return guarded("outcome", [&] {
    RunOutcome o;
    const auto status = j.at("status").get<std::string>();
    if (status != "success" && status != "exhausted") throw Error(ErrorCode::BadInput, "unknown status");
    o.status = status == "success" ? RunStatus::Success : RunStatus::Exhausted;
    o.colouring = j.at("colours").get<PartialColouring>();
    o.record = record_from_json(j.at("record"));
    o.steps = j.at("steps").get<std::size_t>();
    o.seed = j.at("seed").get<std::uint64_t>();
    o.draws = j.at("draws").get<std::vector<std::size_t>>();
    return o;
  });
}

Json choices_to_json(const std::vector<std::size_t>& draws) { return Json{{"choices", draws}}; }

std::vector<std::size_t> choices_from_json(const Json& j) {
  return guarded("choices", [&] { return j.at("choices").get<std::vector<std::size_t>>(); });
}

Json violation_to_json(const Violation& v) {
  return Json{{"face", v.face}, {"start", v.start}, {"length", v.length}, {"path", v.path}, {"block", v.block}};
}

Violation violation_from_json(const Json& j) {
  return guarded("violation", [&] {
    Violation v;
    v.face = j.at("face").get<std::size_t>();
    v.start = j.at("start").get<std::size_t>();
    v.length = j.at("length").get<std::size_t>();
    v.path = j.at("path").get<std::vector<Vertex>>();
    v.block = j.at("block").get<std::vector<Colour>>();
    return v;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  return guarded(path.c_str(), [&] { return Json::parse(in); });
}

void write_json_file(const std::string& path, const Json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace thue
