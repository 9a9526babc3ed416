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
#include "gaploc/augmecon.hpp"
#include "gaploc/errors.hpp"
#include "gaploc/oracle.hpp"
#include "gaploc/ranges.hpp"
#include "support/oracles.hpp"

using namespace gaploc;
using gaploc::testing::DataPath;
using gaploc::testing::SameSet;

namespace {

Scenario T1() { return load_scenario(DataPath("T1.json")); }

const Ranges kT1Ranges{{{0.25, 1.0}, {90, 140}, {2000, 4000}}};

std::vector<ObjectiveVector> Objectives(const ParetoFront& f) {
  std::vector<ObjectiveVector> out;
  for (const auto& e : f.entries) out.push_back(e.objectives);
  return out;
}

}  // namespace

TEST_CASE("T1 front with ten gridpoints equals the oracle for every main objective") {
  const Scenario s = T1();
  const auto oracle = oracle_front(enumerate_oracle(s));
  for (std::size_t m = 0; m < kNumObjectives; ++m) {
    GridSpec g;
    g.gridpoints = 10;
    g.main_objective = m;
    const ParetoFront f = augmecon2(s, kT1Ranges, g);
    CHECK(SameSet(Objectives(f), oracle, 1e-6));
    CHECK(f.run_bound == 121);
    CHECK(f.solver_calls <= f.run_bound);
    CHECK(f.solver_calls == static_cast<long>(f.cells.size()));
    for (const auto& e : f.entries) CHECK(check_feasible(s, e.solution).empty());
  }
}

TEST_CASE("two gridpoints stay within nine runs and bypass saves some") {
  const Scenario s = T1();
  GridSpec g;
  g.gridpoints = 2;
  const ParetoFront f = augmecon2(s, kT1Ranges, g);
  CHECK(f.run_bound == 9);
  CHECK(f.solver_calls <= 9);
  GridSpec fine;
  fine.gridpoints = 10;
  CHECK(augmecon2(s, kT1Ranges, fine).solver_calls < 121);
}

TEST_CASE("parallel mode solves every cell and finds the same front") {
  const Scenario s = T1();
  GridSpec g;
  g.gridpoints = 4;
  AugmeconOptions par;
  par.parallel = true;
  par.threads = 4;
  const ParetoFront a = augmecon2(s, kT1Ranges, g);
  const ParetoFront b = augmecon2(s, kT1Ranges, g, par);
  CHECK(b.solver_calls == 25);
  CHECK(SameSet(Objectives(a), Objectives(b), 1e-9));
  for (std::size_t k = 1; k < b.cells.size(); ++k) {
    const auto& p = b.cells[k - 1];
    const auto& c = b.cells[k];
    CHECK((p.outer < c.outer || (p.outer == c.outer && p.inner < c.inner)));
  }
  const ParetoFront again = augmecon2(s, kT1Ranges, g, par);
  CHECK(Objectives(again) == Objectives(b));
}

TEST_CASE("a flat range collapses its loop") {
  const Scenario s = T1();
  Ranges flat = kT1Ranges;
  flat[1] = {140, 140};
  GridSpec g;
  g.gridpoints = 5;
  const ParetoFront f = augmecon2(s, flat, g);
  CHECK(f.run_bound == 6);
  CHECK(f.solver_calls <= 6);
  for (const auto& e : f.entries) CHECK(e.objectives.f2 <= 140 + 1e-6);
}

TEST_CASE("scalarized cells") {
  const Scenario s = T1();
  const LinearModel model = build_linear_model(s);
  GridSpec g;
  SUBCASE("nadir cell reproduces the single-objective optimum") {
    const Scalarized sc = scalarize(model, kT1Ranges, g, 140, 4000);
    const milp::Result r = milp::solve(sc.problem);
    REQUIRE(r.status == milp::Status::kOptimal);
    CHECK(model.objective_value(0, r.values) == doctest::Approx(0.25));
  }
  SUBCASE("cost bound below the cheapest layout is infeasible") {
    CHECK(milp::solve(scalarize(model, kT1Ranges, g, 140, 1999).problem).status ==
          milp::Status::kInfeasible);
    CHECK(milp::solve(scalarize(model, kT1Ranges, g, 140, 2000).problem).status ==
          milp::Status::kOptimal);
  }
  SUBCASE("tightening a bound never improves the main objective") {
    double previous = -1e300;
    for (double eps = 4000; eps >= 2000; eps -= 250) {
      const milp::Result r = milp::solve(scalarize(model, kT1Ranges, g, 140, eps).problem);
      REQUIRE(r.has_solution());
      const double main = model.objective_value(0, r.values);
      CHECK(main >= previous - 1e-9);
      previous = main;
    }
  }
  SUBCASE("augmentation picks a non-dominated optimum") {
    const Scalarized sc = scalarize(model, kT1Ranges, g, 140, 4000);
    const milp::Result r = milp::solve(sc.problem);
    const Solution sol = model.decode(r.values);
    const ObjectiveVector v = eval_objectives(s, sol);
    for (const auto& o : oracle_front(enumerate_oracle(s))) CHECK_FALSE(dominates(o, v));
  }
  CHECK(scalarize(s, kT1Ranges, g, 140, 4000).problem.num_cols() == model.problem.num_cols() + 2);
}

TEST_CASE("option validation") {
  const Scenario s = T1();
  GridSpec g;
  g.gridpoints = 0;
  CHECK_THROWS_AS(augmecon2(s, kT1Ranges, g), ValidationError);
  g.gridpoints = 2;
  g.augmentation_delta = 0.0;
  CHECK_THROWS_AS(augmecon2(s, kT1Ranges, g), ValidationError);
  g.augmentation_delta = 0.02;
  CHECK_THROWS_AS(augmecon2(s, kT1Ranges, g), ValidationError);
  g.augmentation_delta = 1e-3;
  Ranges bad = kT1Ranges;
  bad[2] = {4000, 2000};
  CHECK_THROWS_AS(augmecon2(s, bad, g), ValidationError);
  CHECK_THROWS_AS(constrained_objectives(3), ValidationError);
  CHECK(constrained_objectives(0).inner == 1);
  CHECK(constrained_objectives(0).outer == 2);
}

TEST_CASE("pipeline ranges feed the grid") {
  const Scenario s = T1();
  const Ranges rg = build_ranges(run_methods(s, {}, {}, 2));
  GridSpec g;
  g.gridpoints = 10;
  const ParetoFront f = augmecon2(s, rg, g);
  CHECK(SameSet(Objectives(f), oracle_front(enumerate_oracle(s)), 1e-6));
}
