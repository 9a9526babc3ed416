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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "gaploc/errors.hpp"
#include "gaploc/instance_gen.hpp"
#include "gaploc/model.hpp"
#include "support/oracles.hpp"

using namespace gaploc;
using gaploc::testing::DataPath;

namespace {

Scenario T1() { return load_scenario(DataPath("T1.json")); }

// Every generator at `site`, one pattern, `j2` copies of bin j2 and `j1` of j1.
Solution AllAt(const Scenario& s, std::size_t site, std::size_t pattern, int j1, int j2) {
  Solution sol = Solution::empty(s);
  for (auto& a : sol.assignment) a = site;
  sol.freq(0, site) = pattern;
  sol.bins(0, 0, site) = j1;
  sol.bins(1, 0, site) = j2;
  return sol;
}

bool HasFamily(const std::vector<Violation>& v, ConstraintFamily f) {
  return std::any_of(v.begin(), v.end(), [f](const Violation& x) { return x.family == f; });
}

}  // namespace

TEST_CASE("objectives of hand-built T1 layouts") {
  const Scenario s = T1();
  // All at i2 every second day in two j2 bins.
  const ObjectiveVector a = eval_objectives(s, AllAt(s, 1, 1, 0, 2));
  CHECK(a.f1 == doctest::Approx(0.25));
  CHECK(a.f2 == doctest::Approx(140.0));
  CHECK(a.f3 == doctest::Approx(4000.0));
  // All at i2 daily in one j2 bin.
  const ObjectiveVector b = eval_objectives(s, AllAt(s, 1, 0, 0, 1));
  CHECK(b.f1 == doctest::Approx(0.5));
  CHECK(b.f2 == doctest::Approx(140.0));
  CHECK(b.f3 == doctest::Approx(2000.0));
  CHECK(check_feasible(s, AllAt(s, 1, 1, 0, 2)).empty());
  CHECK(check_feasible(s, AllAt(s, 1, 0, 0, 1)).empty());
}

TEST_CASE("check_feasible names each violated family") {
  const Scenario s = T1();
  CHECK(HasFamily(check_feasible(s, AllAt(s, 1, 1, 0, 1)), ConstraintFamily::kCapacity));
  CHECK(HasFamily(check_feasible(s, AllAt(s, 1, 0, 0, 3)), ConstraintFamily::kSpace));
  CHECK(HasFamily(check_feasible(s, AllAt(s, 1, 0, -1, 2)), ConstraintFamily::kDomain));

  Solution missing = AllAt(s, 1, 0, 0, 1);
  missing.assignment[2].reset();
  CHECK(HasFamily(check_feasible(s, missing), ConstraintFamily::kAssignment));

  Solution no_freq = AllAt(s, 1, 0, 0, 1);
  no_freq.freq(0, 1).reset();
  CHECK(HasFamily(check_feasible(s, no_freq), ConstraintFamily::kFrequencyRequired));

  const Scenario tight = s.with_max_distance(200);
  CHECK(HasFamily(check_feasible(tight, AllAt(tight, 1, 0, 0, 1)), ConstraintFamily::kDistance));

  Solution bad = Solution::empty(s);
  bad.assignment[0] = 7;
  CHECK_THROWS_AS(check_feasible(s, bad), UnknownId);
  CHECK_THROWS_AS(eval_objectives(s, bad), UnknownId);
}

TEST_CASE("linear model shape on T1") {
  const Scenario s = T1();
  const LinearModel m = build_linear_model(s);
  CHECK(m.count_x() == 6);
  CHECK(m.count_f() == 4);
  CHECK(m.count_t() == 4);
  CHECK(m.count_u() == 12);
  CHECK(m.problem.num_cols() == 26);
  // t upper bounds are floor(space / footprint).
  CHECK(m.problem.variables[m.t_col(0, 0, 0)].upper == 5.0);
  CHECK(m.problem.variables[m.t_col(1, 0, 0)].upper == 2.0);
  for (int c = 0; c < m.problem.num_cols(); ++c) {
    const auto& v = m.problem.variables[c];
    CHECK(v.lower == 0.0);
  }

  const Scenario tight = s.with_max_distance(200);
  const LinearModel mt = build_linear_model(tight);
  CHECK(mt.count_x() == 4);
  CHECK(mt.x_col(0, 1) == LinearModel::kOmitted);
  CHECK(mt.x_col(2, 0) == LinearModel::kOmitted);
}

TEST_CASE("encode then decode is the identity and objectives agree") {
  const Scenario s = T1();
  const LinearModel m = build_linear_model(s);
  for (const Solution& sol : {AllAt(s, 1, 1, 0, 2), AllAt(s, 1, 0, 0, 1), AllAt(s, 0, 0, 2, 0)}) {
    const auto v = m.encode(sol);
    CHECK(m.decode(v) == sol);
    const ObjectiveVector o = eval_objectives(s, sol);
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      CHECK(m.objective_value(k, v) == doctest::Approx(o[k]));
    }
    const bool feasible = check_feasible(s, sol).empty();
    CHECK((milp::max_violation(m.problem, v) <= 1e-9) == feasible);
  }
}

TEST_CASE("encoded feasibility matches the nonlinear check on random layouts") {
  std::mt19937_64 rng(42);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Scenario s = random_tiny_instance(seed);
    const LinearModel m = build_linear_model(s);
    for (int trial = 0; trial < 60; ++trial) {
      Solution sol = Solution::empty(s);
      for (std::size_t p = 0; p < s.num_generators(); ++p) {
        const auto reach = reachable_site_indices(s, p);
        sol.assignment[p] = reach[rng() % reach.size()];
      }
      for (auto& f : sol.frequency) {
        const auto r = rng() % (s.num_frequencies() + 1);
        if (r < s.num_frequencies()) f = r;
      }
      for (std::size_t j = 0; j < s.num_bins(); ++j) {
        for (std::size_t h = 0; h < s.num_fractions(); ++h) {
          for (std::size_t i = 0; i < s.num_sites(); ++i) {
            sol.bins(j, h, i) = static_cast<int>(rng() % 3);
          }
        }
      }
      const bool feasible = check_feasible(s, sol).empty();
      const auto v = m.encode(sol);
      CHECK((milp::max_violation(m.problem, v) <= 1e-9) == feasible);
    }
  }
}

TEST_CASE("linear capacity rows agree with the product form on T1") {
  const Scenario s = T1();
  const LinearModel m = build_linear_model(s);
  int agree = 0;
  int total = 0;
  for (std::size_t i = 0; i < s.num_sites(); ++i) {
    for (int xm = 0; xm < 8; ++xm) {
      for (int fm = 0; fm < 4; ++fm) {
        for (int t1 = 0; t1 <= 5; ++t1) {
          for (int t2 = 0; t2 <= 2; ++t2) {
            const std::vector<int> x{xm & 1, (xm >> 1) & 1, (xm >> 2) & 1};
            const std::vector<int> f{fm & 1, (fm >> 1) & 1};
            const std::vector<int> t{t1, t2};
            const bool a = gaploc::testing::NonlinearCapacityHolds(s, 0, x, f, t);
            const bool b = gaploc::testing::LinearCapacitySatisfiable(s, m, 0, i, x, f, t);
            agree += a == b;
            ++total;
          }
        }
      }
    }
  }
  CHECK(agree == total);
}

TEST_CASE("bin configurations and the cheapest cover") {
  const Scenario s = T1();
  // Pairs (n1, n2) with n1 + 2 n2 <= 5.
  CHECK(enumerate_bin_configurations(s, 5.0).size() == 12);
  CHECK(enumerate_bin_configurations(s, 0.5).size() == 1);

  const std::vector<double> demand{2.0};
  const auto choice = min_cost_bins(s, 1, demand);
  REQUIRE(choice.has_value());
  CHECK(choice->cost == 2000.0);
  // j2 alone ties j1 twice on cost and footprint; fewer bins wins.
  CHECK(choice->counts == std::vector<int>{0, 1});

  const std::vector<double> half{0.5};
  CHECK(min_cost_bins(s, 1, half)->counts == std::vector<int>{1, 0});
  const std::vector<double> none{0.0};
  CHECK(min_cost_bins(s, 1, none)->cost == 0.0);
  const std::vector<double> too_much{6.0};
  CHECK_FALSE(min_cost_bins(s, 1, too_much).has_value());
}

TEST_CASE("family names") {
  CHECK(family_name(ConstraintFamily::kCapacity) == "capacity");
  CHECK(family_name(ConstraintFamily::kFrequencyRequired) == "frequency-required");
}
