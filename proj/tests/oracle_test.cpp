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
#include "support/oracles.hpp"

using namespace gaploc;
using gaploc::testing::BruteFront;
using gaploc::testing::DataPath;
using gaploc::testing::SameSet;

TEST_CASE("T1 front from exhaustive enumeration") {
  const Scenario s = load_scenario(DataPath("T1.json"));
  const auto entries = enumerate_oracle(s);
  const auto front = oracle_front(entries);
  const std::vector<ObjectiveVector> expected{
      {0.25, 140, 4000}, {0.5, 90, 4000}, {0.5, 140, 2000}, {0.75, 90, 3000}, {1.0, 90, 2000}};
  CHECK(SameSet(front, expected, 1e-9));
  CHECK(front.front() == ObjectiveVector{0.25, 140, 4000});
  for (std::size_t k = 1; k < front.size(); ++k) {
    CHECK((front[k - 1].f1 < front[k].f1 ||
           (front[k - 1].f1 == front[k].f1 && front[k - 1].f2 <= front[k].f2)));
  }
}

TEST_CASE("every oracle entry is feasible and flags match a pairwise filter") {
  for (std::uint64_t seed = 1000; seed < 1012; ++seed) {
    const Scenario s = random_tiny_instance(seed);
    const auto entries = enumerate_oracle(s);
    std::vector<ObjectiveVector> all;
    for (const auto& e : entries) {
      CHECK(check_feasible(s, e.solution).empty());
      const ObjectiveVector o = eval_objectives(s, e.solution);
      CHECK(gaploc::testing::SameSet({o}, {e.objectives}, 1e-12));
      all.push_back(e.objectives);
    }
    const auto brute = BruteFront(all);
    CHECK(SameSet(oracle_front(entries), brute, 1e-9));
    for (const auto& e : entries) {
      bool on_front = false;
      for (const auto& b : brute) on_front = on_front || SameSet({b}, {e.objectives}, 1e-9);
      CHECK(e.non_dominated == on_front);
    }
  }
}

TEST_CASE("single generator with one exact bin gives a singleton front") {
  ScenarioData d;
  d.name = "one";
  d.sites = {{"i1", 1.0, std::nullopt}};
  d.generators = {{"g1", {1.0}, std::nullopt}};
  d.bins = {{"j1", 500, 1.0, 1.0}};
  d.fractions = {"mixed"};
  d.frequencies = {{"a1", 1}};
  d.distances = {{10}};
  d.max_distance = 300;
  const Scenario s = Scenario::create(d);
  const auto front = oracle_front(enumerate_oracle(s));
  REQUIRE(front.size() == 1);
  CHECK(front[0] == ObjectiveVector{1.0, 10.0, 500.0});
}

TEST_CASE("cap guards the enumeration size") {
  const Scenario s = load_scenario(DataPath("T1.json"));
  CHECK_THROWS_AS(enumerate_oracle(s, 10), InstanceTooLarge);
  // 2^3 assignments times 3^2 pattern choices.
  CHECK_NOTHROW(enumerate_oracle(s, 72));
  CHECK_THROWS_AS(enumerate_oracle(s, 71), InstanceTooLarge);
}
