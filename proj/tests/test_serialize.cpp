#include <doctest.h>

#include "remixed/recurrence.hpp"
#include "remixed/serialize.hpp"
#include "util.hpp"

using namespace remixed;
using nlohmann::json;
using testutil::poly;

TEST_CASE("QPoly JSON round trip") {
  for (const QPoly& p : {QPoly(), qfact(4), QPoly::monomial(3, 7),
                         remixed::remixed({0, 3, 0, 0, 0, 1, 3}),
                         QPoly(std::vector<Rat>{Rat(3, 2), Rat(-1), Rat(1, 3)})}) {
    json j = qpoly_to_json(p);
    CHECK(qpoly_from_json(j) == p);
  }
  json j = qpoly_to_json(QPoly::monomial(2) * qint(3));
  CHECK(j["valuation"] == 2);
  CHECK(j["coeffs"] == json::array({1, 1, 1}));
  // rational coefficients become string pairs
  json jr = qpoly_to_json(QPoly(Rat(3, 2)));
  CHECK(jr["coeffs"][0] == json::array({"3", "2"}));
}

TEST_CASE("simulation report JSON") {
  SimulationReport rep = simulate({2, 0}, Rat(1), 100, 42);
  StableDistribution law = klyachko_expand({2, 0});
  json j = simulation_to_json(rep, &law);
  CHECK(j["c"] == json::array({2, 0}));
  CHECK(j["q"] == "1");
  CHECK(j["samples"] == 100);
  CHECK(j["seed"] == 42);
  long total = 0;
  for (const auto& o : j["outcomes"]) {
    total += o["count"].get<long>();
    CHECK(o["exact"] == "1/2");
  }
  CHECK(total == 100);
  json no_law = simulation_to_json(rep);
  CHECK(no_law["outcomes"][0]["exact"].is_null());
}

TEST_CASE("Postnikov tree JSON and DOT") {
  auto trees = enumerate_postnikov({2, 2, 4, 4});
  REQUIRE(trees.size() == 2);
  json j = postnikov_tree_to_json(trees[0]);
  CHECK(j.contains("weight"));
  const json& root = j["tree"];
  CHECK(root.contains("bs"));
  CHECK(root.contains("dec"));
  CHECK(root.contains("f"));
  CHECK(root["dec"] == 4);  // root carries the last letter's position
  std::string dot = postnikov_to_dot(trees[0]);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("bilabeled tree JSON and DOT") {
  auto trees = enumerate_bilabeled({2, 0, 1});
  REQUIRE(!trees.empty());
  json j = bilabeled_to_json(trees[0]);
  CHECK(j.contains("dec"));
  CHECK(j.contains("lr"));
  CHECK(j["left"].contains("lr"));
  std::string dot = bilabeled_to_dot(trees[0]);
  CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("check result JSON") {
  json pass = check_to_json({"cyclic", 4, true, ""});
  CHECK(pass["check"] == "cyclic");
  CHECK(pass["r"] == 4);
  CHECK(pass["pass"] == true);
  CHECK(pass["witness"].is_null());
  json fail = check_to_json({"psu", 3, false, "c=1,2,0"});
  CHECK(fail["witness"] == "c=1,2,0");
}
