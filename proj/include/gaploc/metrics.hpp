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

#ifndef GAPLOC_METRICS_HPP_
#define GAPLOC_METRICS_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaploc/model.hpp"
#include "gaploc/scenario.hpp"

namespace gaploc {

inline constexpr double kDominanceSlack = 1e-9;

struct ObjectiveRange {
  double ideal = 0.0;
  double nadir = 0.0;
  bool operator==(const ObjectiveRange&) const = default;
};

using Ranges = std::array<ObjectiveRange, kNumObjectives>;

// (value - ideal) / (nadir - ideal) * 100. Negative below the ideal. A zero
// range yields 0 and a warning.
double delta(double value, double ideal, double nadir);

double l2(std::span<const double> deltas);

struct DeviationRow {
  ObjectiveVector values;
  std::array<double, kNumObjectives> delta{};
  double l2 = 0.0;
};

DeviationRow deviation(const ObjectiveVector& values, const Ranges& ranges);

// a <= b + slack everywhere and a < b - slack somewhere (minimization).
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

bool approx_equal(const ObjectiveVector& a, const ObjectiveVector& b, double tol);

// Indices of the non-dominated members in input order. Of several equal
// vectors (within the slack) only the first is kept.
std::vector<std::size_t> pareto_filter(std::span<const ObjectiveVector> points);

struct BaselineComparison {
  ObjectiveVector baseline;
  ObjectiveVector candidate;
  // 100 * (candidate - baseline) / baseline; empty when the baseline value is 0.
  std::array<std::optional<double>, kNumObjectives> change;
  // Generators with no open baseline site within D. When non-empty the
  // baseline is infeasible and f2 averages over the reachable subset.
  std::vector<std::string> unreachable;
  Solution baseline_solution;
};

// `layout` fixes bins and frequencies; its assignment is ignored and rebuilt
// by sending each generator to its nearest open site within D.
BaselineComparison compare_to_baseline(const Scenario& s, const ObjectiveVector& candidate,
                                       const Solution& layout);

}  // namespace gaploc

#endif  // GAPLOC_METRICS_HPP_
