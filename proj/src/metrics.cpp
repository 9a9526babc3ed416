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

#include "gaploc/metrics.hpp"

#include <cmath>
#include <limits>

#include "gaploc/warnings.hpp"

namespace gaploc {

double delta(double value, double ideal, double nadir) {
  const double range = nadir - ideal;
  if (range == 0.0) {
    warn("nadir equals ideal; deviation reported as 0");
    return 0.0;
  }
  return (value - ideal) / range * 100.0;
}

double l2(std::span<const double> deltas) {
  double sum = 0.0;
  for (double d : deltas) sum += d * d;
  return std::sqrt(sum);
}

DeviationRow deviation(const ObjectiveVector& values, const Ranges& ranges) {
  DeviationRow row;
  row.values = values;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    row.delta[k] = delta(values[k], ranges[k].ideal, ranges[k].nadir);
  }
  row.l2 = l2(row.delta);
  return row;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  bool strict = false;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (a[k] > b[k] + kDominanceSlack) return false;
    if (a[k] < b[k] - kDominanceSlack) strict = true;
  }
  return strict;
}

bool approx_equal(const ObjectiveVector& a, const ObjectiveVector& b, double tol) {
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

std::vector<std::size_t> pareto_filter(std::span<const ObjectiveVector> points) {
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < points.size(); ++a) {
    bool drop = false;
    for (std::size_t b = 0; b < points.size() && !drop; ++b) {
      if (b == a) continue;
      drop = dominates(points[b], points[a]) ||
             (b < a && approx_equal(points[b], points[a], kDominanceSlack));
    }
    if (!drop) kept.push_back(a);
  }
  return kept;
}

BaselineComparison compare_to_baseline(const Scenario& s, const ObjectiveVector& candidate,
                                       const Solution& layout) {
  BaselineComparison out;
  out.candidate = candidate;
  Solution sol = layout;
  std::vector<bool> open(s.num_sites());
  for (std::size_t i = 0; i < s.num_sites(); ++i) open[i] = layout.site_open(i);

  std::size_t served = 0;
  double distance = 0.0;
  for (std::size_t p = 0; p < s.num_generators(); ++p) {
    sol.assignment[p].reset();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.num_sites(); ++i) {
      if (open[i] && s.reachable(p, i) && s.distance(p, i) < best) {
        best = s.distance(p, i);
        sol.assignment[p] = i;
      }
    }
    if (sol.assignment[p]) {
      ++served;
      distance += best;
    } else {
      out.unreachable.push_back(s.generators()[p].id);
    }
  }
  out.baseline = eval_objectives(s, sol);
  out.baseline.f2 = served == 0 ? 0.0 : distance / static_cast<double>(served);
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (out.baseline[k] != 0.0) {
      out.change[k] = 100.0 * (candidate[k] - out.baseline[k]) / out.baseline[k];
    }
  }
  out.baseline_solution = std::move(sol);
  return out;
}

}  // namespace gaploc
