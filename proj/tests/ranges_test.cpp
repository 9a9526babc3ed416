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
#include <array>

#include "doctest.h"
#include "gaploc/errors.hpp"
#include "gaploc/instance_gen.hpp"
#include "gaploc/oracle.hpp"
#include "gaploc/ranges.hpp"
#include "gaploc/warnings.hpp"
#include "support/oracles.hpp"

using namespace gaploc;
using gaploc::testing::DataPath;

namespace {

Scenario T1() { return load_scenario(DataPath("T1.json")); }

bool InFeasibleSet(const std::vector<OracleEntry>& entries, const ObjectiveVector& v) {
  return std::any_of(entries.begin(), entries.end(),
                     [&](const OracleEntry& e) { return approx_equal(e.objectives, v, 1e-9); });
}

double MinOver(const std::vector<OracleEntry>& entries, std::size_t k) {
  double best = 1e300;
  for (const auto& e : entries) best = std::min(best, e.objectives[k]);
  return best;
}

}  // namespace

TEST_CASE("single-objective optima match the oracle minima on T1") {
  const Scenario s = T1();
  const auto entries = enumerate_oracle(s);
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    const MethodReport r = single_objective(s, k);
    REQUIRE(r.has_solution());
    CHECK(r.status == milp::Status::kOptimal);
    CHECK(r.objectives[k] == doctest::Approx(MinOver(entries, k)));
    CHECK(check_feasible(s, *r.solution).empty());
    CHECK(r.order == std::vector<std::size_t>{k});
  }
  CHECK(single_objective(s, 0).objectives.f1 == doctest::Approx(0.25));
  CHECK(single_objective(s, 1).objectives.f2 == doctest::Approx(90.0));
  CHECK(single_objective(s, 2).objectives.f3 == doctest::Approx(2000.0));
}

TEST_CASE("payoff and default weights") {
  std::vector<MethodReport> runs(3);
  for (std::size_t k = 0; k < 3; ++k) {
    runs[k].solution = Solution{};
    runs[k].objectives = {double(k), 10.0 - k, 100.0 * (k + 1)};
  }
  const Payoff p = payoff_from(runs);
  CHECK(p.best == std::array<double, 3>{0, 8, 100});
  CHECK(p.worst == std::array<double, 3>{2, 10, 300});
  CHECK(default_weights(1) == std::array<double, 3>{1, 1000, 1});
  CHECK_THROWS_AS(payoff_from(std::vector<MethodReport>(2)), EmptyPool);
}

TEST_CASE("weighted sum with the heavy weight on f2") {
  const Scenario s = T1();
  std::vector<MethodReport> singles;
  for (std::size_t k = 0; k < 3; ++k) singles.push_back(single_objective(s, k));
  const Payoff payoff = payoff_from(singles);
  const MethodReport r = weighted_sum(s, 1, payoff);
  REQUIRE(r.has_solution());
  CHECK(r.objectives.f2 == doctest::Approx(90.0));
  CHECK(InFeasibleSet(enumerate_oracle(s), r.objectives));
}

TEST_CASE("weighted sum drops flat terms and rejects all-flat payoffs") {
  const Scenario s = T1();
  Payoff flat;
  flat.best = {0.5, 90, 2000};
  flat.worst = {0.5, 90, 2000};
  CHECK_THROWS_AS(weighted_sum(s, 0, flat), DegenerateRange);

  std::vector<std::string> seen;
  const auto prev = set_warning_sink([&](std::string_view m) { seen.emplace_back(m); });
  Payoff partial;
  partial.best = {0.25, 90, 2000};
  partial.worst = {1.0, 90, 4000};
  const MethodReport r = weighted_sum(s, 0, partial);
  set_warning_sink(prev);
  CHECK(seen.size() == 1);
  REQUIRE(r.has_solution());
  CHECK(r.objectives.f1 == doctest::Approx(0.25));
}

TEST_CASE("lexicographic orders on T1") {
  const Scenario s = T1();
  const auto entries = enumerate_oracle(s);
  const std::array<std::size_t, 3> order{1, 2, 0};
  for (bool warm : {false, true}) {
    const MethodReport r = lexicographic(s, order, warm);
    REQUIRE(r.has_solution());
    CHECK(r.objectives == ObjectiveVector{1.0, 90, 2000});
    CHECK(r.stages.size() == 3);
    CHECK(r.method == (warm ? Method::kLexicographicWarm : Method::kLexicographic));
    CHECK(InFeasibleSet(entries, r.objectives));
  }
  const std::array<std::size_t, 1> single{2};
  CHECK(lexicographic(s, single, false).objectives[2] ==
        doctest::Approx(single_objective(s, 2).objectives[2]));

  const std::array<std::size_t, 2> repeat{1, 1};
  CHECK_THROWS_AS(lexicographic(s, repeat, false), ValidationError);
  const std::array<std::size_t, 1> bad{3};
  CHECK_THROWS_AS(lexicographic(s, bad, false), Error);
}

TEST_CASE("warm stages never worsen their incumbent and keep earlier bounds") {
  std::vector<Scenario> corpus{T1()};
  for (std::uint64_t seed : {1000u, 1001u, 1007u, 1010u, 1011u}) {
    corpus.push_back(random_tiny_instance(seed));
  }
  for (const Scenario& s : corpus) {
    std::array<std::size_t, 3> order{0, 1, 2};
    do {
      const MethodReport r = lexicographic(s, order, true);
      REQUIRE(r.has_solution());
      for (std::size_t m = 0; m < r.stages.size(); ++m) {
        const auto& st = r.stages[m];
        if (st.incumbent) CHECK(st.value <= *st.incumbent + 1e-9);
        CHECK(r.objectives[order[m]] <= st.value + 1e-9 * std::max(1.0, std::abs(st.value)) + 1e-9);
      }
      CHECK(r.stages.front().incumbent == std::nullopt);
      for (std::size_t m = 1; m < r.stages.size(); ++m) CHECK(r.stages[m].incumbent.has_value());
      const MethodReport cold = lexicographic(s, order, false);
      CHECK(approx_equal(cold.objectives, r.objectives, 1e-6));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("stage failure under a zero budget") {
  milp::SolveOptions none;
  none.time_limit_s = 0;
  const std::array<std::size_t, 3> order{0, 1, 2};
  CHECK_THROWS_AS(lexicographic(T1(), order, true, none), StageFailed);
}

TEST_CASE("run_methods pools every method and marks dominance") {
  const Scenario s = T1();
  const auto reports = run_methods(s, {}, {}, 4);
  CHECK(reports.size() == 3 + 3 + 6 + 6);
  const auto entries = enumerate_oracle(s);
  std::size_t non_dominated = 0;
  for (const auto& r : reports) {
    REQUIRE(r.has_solution());
    CHECK(InFeasibleSet(entries, r.objectives));
    non_dominated += !r.dominated;
  }
  CHECK(non_dominated >= 3);
  const Ranges rg = build_ranges(reports);
  CHECK(rg[0].ideal == doctest::Approx(0.25));
  CHECK(rg[1].ideal == doctest::Approx(90));
  CHECK(rg[2].ideal == doctest::Approx(2000));
  for (const auto& o : rg) CHECK(o.nadir >= o.ideal);

  // Same pool sequentially.
  const auto serial = run_methods(s, {}, {}, 1);
  REQUIRE(serial.size() == reports.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].method == reports[k].method);
    CHECK(serial[k].order == reports[k].order);
    CHECK(serial[k].objectives == reports[k].objectives);
  }

  MethodSelection only_single{true, false, false, false};
  CHECK(run_methods(s, only_single, {}, 2).size() == 3);
}

TEST_CASE("dominated reports never change the ranges") {
  std::vector<MethodReport> pool(3);
  const std::array<ObjectiveVector, 3> pts{
      ObjectiveVector{0.25, 140, 4000}, {1.0, 90, 2000}, {0.5, 140, 2000}};
  for (std::size_t k = 0; k < 3; ++k) {
    pool[k].solution = Solution{};
    pool[k].objectives = pts[k];
  }
  mark_dominance(pool);
  const Ranges before = build_ranges(pool);
  MethodReport worse;
  worse.solution = Solution{};
  worse.objectives = {1.0, 243.33, 4000};
  pool.push_back(worse);
  mark_dominance(pool);
  CHECK(pool.back().dominated);
  CHECK(build_ranges(pool) == before);
  CHECK_THROWS_AS(build_ranges(std::vector<MethodReport>(2)), EmptyPool);
}

TEST_CASE("method names") {
  CHECK(method_name(Method::kSingleObjective) == "single");
  CHECK(method_name(Method::kLexicographicWarm) == "lex-warm");
}
