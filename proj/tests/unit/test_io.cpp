#include "doctest.h"
#include "latkit/constructions.hpp"
#include "latkit/errors.hpp"
#include "latkit/io.hpp"

using namespace latkit;

TEST_CASE("orders round trip through JSON") {
  for (const QuasiOrder& P : enumerate_posets(4)) {
    CHECK(order_from_json(to_json(P)).order == P);
  }
  const std::vector<std::pair<Element, Element>> gens{{0, 1}, {1, 0}};
  const QuasiOrder Q = QuasiOrder::from_generators(2, gens);
  CHECK(order_from_json(to_json(Q)).order == Q);
}

TEST_CASE("labels may name pair entries") {
  const Json j = Json::parse(R"({"size": 3, "labels": ["a", "b", "c"], "pairs": [["a", "b"], ["b", "c"]]})");
  const LabeledOrder lo = order_from_json(j);
  CHECK(lo.order == chain(3));
  CHECK(lo.labels == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("malformed documents are InvalidInput") {
  CHECK_THROWS_AS(order_from_json(Json::parse(R"({"pairs": []})")), InvalidInput);
  CHECK_THROWS_AS(order_from_json(Json::parse(R"({"size": -1})")), InvalidInput);
  CHECK_THROWS_AS(order_from_json(Json::parse(R"({"size": 2, "pairs": [[0, 2]]})")), InvalidInput);
  CHECK_THROWS_AS(order_from_json(Json::parse(R"({"size": 2, "pairs": [[0]]})")), InvalidInput);
  CHECK_THROWS_AS(order_from_json(Json::parse(R"({"size": 2, "labels": ["a", "a"]})")), InvalidInput);
  CHECK_THROWS_AS(subset_from_json(Json::parse("[5]"), 3), InvalidInput);
  CHECK_THROWS_AS(monoid_from_json(Json::parse(R"({"size": 2, "table": [[0, 1]]})")), InvalidInput);
  CHECK_THROWS_AS(topology_from_json(Json::parse(R"({"points": 17})")), InvalidInput);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
}

TEST_CASE("monoids, topologies and maps round trip") {
  const FiniteMonoid M = truncated_addition(3);
  CHECK(monoid_from_json(to_json(M)) == M);
  const FiniteTopology T = sierpinski();
  CHECK(topology_from_json(to_json(T)) == T);
  auto P = std::make_shared<const QuasiOrder>(chain(2));
  auto Q = std::make_shared<const QuasiOrder>(powerset(2));
  const MonotoneMap s(P, Q, {1, 3});
  const MonotoneMap back = map_from_json(to_json(s));
  CHECK(back == s);
  CHECK(back.cod() == *Q);
}

TEST_CASE("verdict JSON carries the witness only on failure") {
  CHECK_FALSE(to_json(Verdict::pass()).contains("witness"));
  const Json j = to_json(Verdict::fail({1, 2}, "note", Subset::of(3, {0})));
  CHECK(j["holds"] == false);
  CHECK(j["witness"]["elements"] == Json::parse("[1, 2]"));
  CHECK(j["witness"]["set"] == Json::parse("[0]"));
}

TEST_CASE("census JSON lines are deterministic") {
  CensusOptions opt;
  opt.filters.convex_range = true;
  const std::string a = census_json_lines(enumerate_embeddings(powerset(1), powerset(2), opt));
  const std::string b = census_json_lines(enumerate_embeddings(powerset(1), powerset(2), opt));
  CHECK(a == b);
  CHECK(std::count(a.begin(), a.end(), '\n') == 4);
}
