#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "factored_info/json_io.hpp"

using namespace factored_info;

TEST_CASE("rational string round trips") {
  CHECK(rational_to_string(Rational(1, 2)) == "1/2");
  CHECK(rational_to_string(Rational(3)) == "3");
  CHECK(rational_to_string(Rational(-2, 4)) == "-1/2");
  CHECK(rational_from_string("1/3") == Rational(1, 3));
  CHECK(rational_from_string("-7") == Rational(-7));
  CHECK(rational_from_string("2/6") == Rational(1, 3));
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("distribution JSON round trip, exact mode") {
  const Json j = Json::parse(R"({
    "cardinalities": [2, 2],
    "entries": [
      {"state": [0, 0], "prob": "1/2"},
      {"state": [1, 1], "prob": "1/2"}
    ]
  })");
  const Distribution p = distribution_from_json(j);
  CHECK(p.is_exact());
  CHECK(p.exact_weight(0) == Rational(1, 2));
  CHECK(p.exact_weight(1) == 0);
  CHECK(p.exact_weight(3) == Rational(1, 2));
  const Distribution back = distribution_from_json(distribution_to_json(p));
  CHECK(back == p);
}

TEST_CASE("distribution JSON round trip, float mode") {
  const Json j = Json::parse(R"({
    "cardinalities": [3],
    "entries": [
      {"state": [0], "prob": 0.25},
      {"state": [2], "prob": 0.75}
    ]
  })");
  const Distribution p = distribution_from_json(j);
  CHECK(!p.is_exact());
  CHECK(p.weight(0) == 0.25);
  CHECK(p.weight(1) == 0.0);
  const Distribution back = distribution_from_json(distribution_to_json(p));
  CHECK(back == p);
}

TEST_CASE("distribution JSON rejects malformed input") {
  CHECK_THROWS_WITH_AS(
      distribution_from_json(Json::parse(R"({
        "cardinalities": [2, 2],
        "entries": [
          {"state": [0, 0], "prob": "1/2"},
          {"state": [1, 1], "prob": 0.5}
        ]
      })")),
      "entries[1].prob: mixes rational and float probability modes",
      std::invalid_argument);

  CHECK_THROWS_AS(distribution_from_json(Json::parse(R"({
        "cardinalities": [2],
        "entries": [{"state": [2], "prob": "1"}]
      })")),
                  std::invalid_argument);

  CHECK_THROWS_AS(distribution_from_json(Json::parse(R"({
        "cardinalities": [2],
        "entries": []
      })")),
                  std::invalid_argument);

  // weights must still sum to one
  CHECK_THROWS_AS(distribution_from_json(Json::parse(R"({
        "cardinalities": [2],
        "entries": [{"state": [0], "prob": "1/3"}]
      })")),
                  std::invalid_argument);
}

TEST_CASE("family and pairing JSON use 1-based indices") {
  const MarginFamily family =
      family_from_json(Json::parse(R"({"n": 3, "sets": [[1, 2], [2, 3]]})"));
  CHECK(family.sets() == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK(family_to_json(family) ==
        Json::parse(R"({"n": 3, "sets": [[1, 2], [2, 3]]})"));
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 2, "sets": [[0]]})")),
                  std::invalid_argument);

  const Pairing pairing =
      pairing_from_json(Json::parse(R"({"n": 2, "match": [2, 1]})"));
  CHECK(pairing.image(0) == 1);
  CHECK(pairing.image(1) == 0);
  CHECK(pairing_to_json(pairing) ==
        Json::parse(R"({"n": 2, "match": [2, 1]})"));
  CHECK_THROWS_AS(
      pairing_from_json(Json::parse(R"({"n": 2, "match": [1, 1]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      pairing_from_json(Json::parse(R"({"n": 3, "match": [1, 2]})")),
      std::invalid_argument);
}

TEST_CASE("split and search config parsing") {
  const BlockSplit split =
      split_from_json(Json::parse(R"({"x": [1, 2], "y": [3, 4]})"), 4);
  CHECK(split.x_block == std::vector<int>{0, 1});
  CHECK(split.y_block == std::vector<int>{2, 3});
  CHECK_THROWS_AS(
      split_from_json(Json::parse(R"({"x": [1], "y": [5]})"), 4),
      std::invalid_argument);

  const SearchConfig config = search_config_from_json(
      Json::parse(R"({"restarts": 7, "seed": 99})"));
  CHECK(config.restarts == 7);
  CHECK(config.seed == 99);
  CHECK(config.max_iterations == 5000);  // default preserved
  CHECK_THROWS_AS(
      search_config_from_json(Json::parse(R"({"restarts": 0})")),
      std::invalid_argument);
}

TEST_CASE("code serialization uses digit strings") {
  const Code code(2, {{0, 0}, {1, 1}});
  CHECK(code_to_json(code) == Json::parse(R"(["00", "11"])"));
  const CodePartition partition = partition_into_codes(2, 2);
  CHECK(partition_to_json(partition) ==
        Json::parse(R"([["00", "11"], ["01", "10"]])"));
}

TEST_CASE("polytope report serialization carries exact rationals") {
  const StateSpace space = StateSpace::homogeneous(3, 2);
  const StateSpace pair = StateSpace::homogeneous(2, 2);
  const Distribution diag =
      Distribution::uniform_over(pair, {0, 3});
  const auto poly = margin_specified_polytope(
      space, MarginFamily(3, {{0, 1}, {1, 2}}), {diag, diag});
  const Json j = margin_polytope_to_json(poly, space);
  CHECK(j["rank"] == 2);
  CHECK(j["is_point"] == true);
  CHECK(j["vertices"].size() == 1);
  CHECK(j["vertices"][0][0]["prob"] == "1/2");
}

TEST_CASE("sfmi polytope serialization smoke test") {
  const auto codes = enumerate_max_distance_codes(2, 2);
  const auto poly = build_sfmi_polytope(2, 2, {codes[0], codes[0]},
                                        Pairing::identity(2));
  const Json j = sfmi_polytope_to_json(poly);
  CHECK(j["affine_dimension"] == 1);
  CHECK(j["support"].size() == 4);
  CHECK(j["vertices"].size() == 2);
  CHECK(j["vertices"][0]["is_code_vertex"] == true);
  CHECK(j["centroid"]["entries"].size() == 4);
}
