#include "crosscap/io.hpp"
#include "crosscap/svg.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace crosscap;

TEST_CASE("schema round trip") {
  const auto s = standard_schema(SurfaceType::nonorientable_surface(3, 2));
  const auto j = to_json(s);
  const auto back = schema_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(classify_surface(back) == SurfaceType::nonorientable_surface(3, 2));
  CHECK(j["pairs"][0]["flag"] == "same");
  CHECK(j["faces"][0]["word"][0]["dir"] == "+");
}

TEST_CASE("schema parsing errors") {
  CHECK_THROWS_AS(schema_from_json(Json::parse(R"({"faces": 3})")), InvalidInput);
  CHECK_THROWS_AS(schema_from_json(Json::parse(R"({"faces": [{"id": "F", "word": [{"edge": "a", "dir": "?"}]}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(schema_from_json(Json::parse(R"({})")), InvalidInput);
  const auto declared = schema_from_json(Json::parse(
      R"({"faces": [{"id": "F", "word": [{"edge": "a", "dir": "+"}, {"edge": "a", "dir": "+"}]}],
          "pairs": [{"edge": "a", "flag": "reversed"}]})"));
  CHECK_FALSE(validate_schema(declared).ok());
}

TEST_CASE("family round trip is exact") {
  const auto st = build_theorem_a(7, 1);
  BuildInfo info{"a", 7, 1, 2, st.disc.face_id, *st.expected_size, *st.expected_type};
  const auto j = to_json(st.family, info);
  const auto file = family_from_json(Json::parse(j.dump()));
  CHECK(to_json(file.family, file.build) == j);
  REQUIRE(file.build);
  CHECK(file.build->expected_size == st.family.size());
  CHECK(file.family.tags == st.family.tags);
  CHECK(j["curves"][0]["chords"][0]["from"]["pos"].get<std::string>().find('/') != std::string::npos);
  const auto st2 = state_from_file(file);
  CHECK(verify_construction(st2).failures == verify_construction(st).failures);
}

TEST_CASE("builds are deterministic") {
  const auto a = to_json(build_theorem_b(9).family).dump();
  const auto b = to_json(build_theorem_b(9).family).dump();
  CHECK(json_hash(Json::parse(a)) == json_hash(Json::parse(b)));
  CHECK(render_svg(build_theorem_a(6, 0).family) == render_svg(build_theorem_a(6, 0).family));
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("report and cut serialisation keep field order") {
  const auto st = build_theorem_b(5);
  const auto r = to_json(verify_construction(st), st.family);
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) {
    keys.push_back(k);
  }
  CHECK(keys == std::vector<std::string>{"summary", "passed", "construction", "failures", "curves", "pairs"});
  CHECK(r["summary"]["count"] == 12);

  const auto n21 = standard_schema(SurfaceType::nonorientable_surface(2, 1));
  const auto cut = to_json(cut_along(n21, {testing::through_crosscaps("alpha", {0, 1})}));
  CHECK(cut["components"].size() == 1);
  CHECK(cut["components"][0]["description"] == "orientable k=0 b=3");
  CHECK(cut["provenance"].size() == 3);
}

TEST_CASE("svg export") {
  const auto st = build_theorem_a(6, 0);
  const auto svg = render_svg(st.family);
  std::size_t groups = 0;
  for (auto p = svg.find("class=\"curve\""); p != std::string::npos; p = svg.find("class=\"curve\"", p + 1)) {
    ++groups;
  }
  CHECK(groups == 24);
  CurveFamily empty;
  empty.schema = standard_schema(SurfaceType::nonorientable_surface(1, 0));
  const auto bare = render_svg(empty);
  CHECK(bare.find("class=\"curve\"") == std::string::npos);
  CHECK(bare.find("⊗") != std::string::npos);
  empty.curves.push_back(testing::midpoint_curve("core", {{0, 1}}));
  const auto one = render_svg(empty);
  CHECK(one.find("<line") != std::string::npos);
  CHECK(one.find("<line", one.find("<line") + 1) == std::string::npos);
}
