// Copyright 2026 The gaploc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "doctest.h"
#include "gaploc/errors.hpp"
#include "gaploc/instance_gen.hpp"
#include "gaploc/oracle.hpp"
#include "gaploc/solution_io.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace gaploc;
using gaploc::testing::DataPath;
using Json = nlohmann::json;

namespace {

Scenario T1() { return load_scenario(DataPath("T1.json")); }

// g1 at i1 and g2, g3 at i2, one j1 at each site emptied daily.
Solution Cheapest(const Scenario& s) {
  Solution sol = Solution::empty(s);
  sol.assignment = {0, 1, 1};
  sol.freq(0, 0) = 0;
  sol.freq(0, 1) = 0;
  sol.bins(0, 0, 0) = 1;
  sol.bins(0, 0, 1) = 1;
  return sol;
}

}  // namespace

TEST_CASE("solution JSON round-trips") {
  const Scenario s = T1();
  const Solution sol = Cheapest(s);
  const std::string text = solution_to_json(s, sol);
  CHECK(parse_solution(s, text) == sol);
  const Json doc = Json::parse(text);
  CHECK(doc["assignment"]["g3"] == "i2");
  CHECK(doc["frequencies"]["mixed@i1"] == "a1");
  CHECK(doc["bins"]["j1@mixed@i2"] == 1);
  CHECK(doc["objectives"]["f3"] == 2000.0);
  CHECK(doc["objectives"]["f2"] == doctest::Approx(90.0));

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Scenario r = random_tiny_instance(seed);
    for (const auto& entry : enumerate_oracle(r)) {
      CHECK(parse_solution(r, solution_to_json(r, entry.solution)) == entry.solution);
    }
  }
}

TEST_CASE("malformed solution documents") {
  const Scenario s = T1();
  CHECK_THROWS_AS(parse_solution(s, "{"), ParseError);
  CHECK_THROWS_AS(parse_solution(s, "[]"), SchemaError);
  CHECK_THROWS_AS(parse_solution(s, R"({"assignment": {"g9": "i1"}})"), UnknownId);
  CHECK_THROWS_AS(parse_solution(s, R"({"assignment": {"g1": 3}})"), SchemaError);
  CHECK_THROWS_AS(parse_solution(s, R"({"bins": {"j1@i1": 1}})"), SchemaError);
  CHECK_THROWS_AS(parse_solution(s, R"({"frequencies": {"mixed@i1": "a7"}})"), UnknownId);
  CHECK_THROWS_AS(load_solution(s, DataPath("missing-solution.json")), ParseError);
}

TEST_CASE("solution CSV lists one row per installed bin type") {
  const Scenario s = T1();
  CHECK(solution_to_csv(s, Cheapest(s)) ==
        "site,fraction,bin,count,frequency_days\n"
        "i1,mixed,j1,1,1\n"
        "i2,mixed,j1,1,1\n");
}

TEST_CASE("GeoJSON carries one point per open site") {
  const Scenario s = T1();
  const Json fc = Json::parse(solution_to_geojson(s, Cheapest(s)));
  CHECK(fc["type"] == "FeatureCollection");
  REQUIRE(fc["features"].size() == 2);
  const Json& f = fc["features"][1];
  CHECK(f["geometry"]["type"] == "Point");
  CHECK(f["geometry"]["coordinates"][0] == s.sites()[1].coordinates->lon);
  CHECK(f["geometry"]["coordinates"][1] == s.sites()[1].coordinates->lat);
  CHECK(f["properties"]["site"] == "i2");
  CHECK(f["properties"]["bin_configuration"]["mixed"] == Json::array({1, 0}));
  CHECK(f["properties"]["frequency_days"]["mixed"] == 1);
  CHECK(f["properties"]["generators"] == Json::array({"g2", "g3"}));
  CHECK(f["properties"]["label"] == "mixed (1, 0) every 1 d");

  const Scenario bare = load_scenario(DataPath("no-coordinates.json"));
  CHECK_THROWS_AS(solution_to_geojson(bare, Cheapest(bare)), ExportWithoutCoordinates);
  CHECK(Json::parse(solution_to_geojson(bare, Solution::empty(bare)))["features"].empty());
}

TEST_CASE("heuristic output converts to a daily-collection solution") {
  const Scenario s = T1();
  const HeuristicSolution h = construct(s, pagerank(build_graph(s)), Policy::kCost);
  const Solution sol = heuristic_to_solution(s, h);
  CHECK(sol == Cheapest(s));
  CHECK(check_feasible(s, sol).empty());
  const ObjectiveVector o = eval_objectives(s, sol);
  const HeuristicSummary sum = evaluate_heuristic(s, h);
  CHECK(o.f2 == doctest::Approx(sum.average_distance));
  CHECK(o.f3 == doctest::Approx(sum.cost));
}
