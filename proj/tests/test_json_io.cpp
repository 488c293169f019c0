#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "thue/engine.hpp"
#include "thue/error.hpp"
#include "thue/generators.hpp"
#include "thue/json_io.hpp"

using namespace thue;

TEST_CASE("graph round trip keeps rotation and labels") {
  for (const auto& fam : family_names()) {
    std::vector<int> p{5};
    if (fam == "grid") p = {3, 4};
    if (fam == "subdivided-star") p = {3, 1};
    if (fam == "subdivided-wheel") p = {4, 1, 1};
    const auto g = generate_family(fam, p);
    const auto back = graph_from_json(Json::parse(graph_to_json(g, fam).dump()));
    CHECK(back.rotation() == g.rotation());
    CHECK(back.labels() == g.labels());
    CHECK(family_from_json(graph_to_json(g, fam)) == fam);
  }
  CHECK_FALSE(family_from_json(graph_to_json(generate_family("path", std::vector<int>{2}))));
}

TEST_CASE("record, colouring, lists, outcome, choices and violation round trip") {
  const auto g = generate_family("grid", std::vector<int>{4, 4});
  const auto lists = random_lists(16, 6, 9, 2);
  const auto out = run(g, lists, 3, 5000);
  CHECK(outcome_from_json(Json::parse(outcome_to_json(out).dump())) == out);
  CHECK(record_from_json(record_to_json(out.record)) == out.record);
  CHECK(colouring_from_json(colouring_to_json(out.colouring)) == out.colouring);
  CHECK(lists_from_json(lists_to_json(lists)) == lists);
  CHECK(choices_from_json(choices_to_json(out.draws)) == out.draws);
  const Violation v{1, 2, 4, {3, 4, 0, 1}, {1, 2}};
  CHECK(violation_from_json(violation_to_json(v)) == v);
}

TEST_CASE("record format") {
  const Record r{10, {std::nullopt, PathCode{1, 0, 2}}};
  CHECK(record_to_json(r).dump() == R"({"T":10,"entries":["E",[1,0,2]]})");
}

TEST_CASE("malformed input") {
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::LoopEdge;
  };
  CHECK(code([] { graph_from_json(Json::parse(R"({"n":2})")); }) == ErrorCode::BadInput);
  CHECK(code([] { graph_from_json(Json::parse(R"({"n":2,"rotation":[[1],[]]})")); }) ==
        ErrorCode::AsymmetricRotation);
  CHECK(code([] { record_from_json(Json::parse(R"({"T":3,"entries":["X"]})")); }) == ErrorCode::BadInput);
  CHECK(code([] { record_from_json(Json::parse(R"({"T":3,"entries":[[1,0]]})")); }) == ErrorCode::BadInput);
  CHECK(code([] { colouring_from_json(Json::parse(R"({"colours":[1,-2]})")); }) == ErrorCode::BadInput);
  CHECK(code([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::BadInput);
}

TEST_CASE("files are written and read back") {
  const std::string path = "test_json_io_tmp.json";
  const Json j = colouring_to_json({1, 2, 0});
  write_json_file(path, j);
  CHECK(read_json_file(path) == j);
  std::remove(path.c_str());
}
