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

#ifndef GAPLOC_MODEL_HPP_
#define GAPLOC_MODEL_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaploc/milp.hpp"
#include "gaploc/scenario.hpp"

namespace gaploc {

inline constexpr std::size_t kNumObjectives = 3;

// (f1 average collection frequency, f2 average walking distance in m,
//  f3 investment cost). Index 0..2 maps to f1..f3.
struct ObjectiveVector {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;

  double operator[](std::size_t k) const { return k == 0 ? f1 : (k == 1 ? f2 : f3); }
  double& operator[](std::size_t k) { return k == 0 ? f1 : (k == 1 ? f2 : f3); }
  bool operator==(const ObjectiveVector&) const = default;
};

// Decision variables of the location model.
//   bins(j, h, i)   t_jhi, number of bins of type j for fraction h at site i
//   assignment[p]   site receiving generator p (x_pi as a function)
//   frequency(h, i) chosen frequency pattern for fraction h at site i (f_hiy)
struct Solution {
  std::size_t num_bins = 0;
  std::size_t num_fractions = 0;
  std::size_t num_sites = 0;
  std::vector<int> bin_counts;
  std::vector<std::optional<std::size_t>> assignment;
  std::vector<std::optional<std::size_t>> frequency;

  // No bins, no frequencies, every generator unassigned.
  static Solution empty(const Scenario& s);

  int& bins(std::size_t j, std::size_t h, std::size_t i) {
    return bin_counts[(j * num_fractions + h) * num_sites + i];
  }
  int bins(std::size_t j, std::size_t h, std::size_t i) const {
    return bin_counts[(j * num_fractions + h) * num_sites + i];
  }
  std::optional<std::size_t>& freq(std::size_t h, std::size_t i) {
    return frequency[h * num_sites + i];
  }
  const std::optional<std::size_t>& freq(std::size_t h, std::size_t i) const {
    return frequency[h * num_sites + i];
  }

  // A site is open when it holds a bin or has a frequency pattern.
  bool site_open(std::size_t i) const;

  bool operator==(const Solution&) const = default;
};

// Throws UnknownId when `sol` does not match the scenario's index sets.
ObjectiveVector eval_objectives(const Scenario& s, const Solution& sol);

enum class ConstraintFamily {
  kAssignment,         // every generator served by exactly one site
  kSpace,              // bin footprint within the site's space
  kCapacity,           // stored volume over a collection period fits the bins
  kFrequencyRequired,  // a used site collects every fraction
  kDistance,           // generator within D of its site
  kDomain,             // non-negative bin counts
};

std::string_view family_name(ConstraintFamily family);

struct Violation {
  ConstraintFamily family;
  std::string message;  // names the indices involved
};

// Checks the nonlinear model directly. Empty iff feasible.
std::vector<Violation> check_feasible(const Scenario& s, const Solution& sol);

// Glover-linearized model over columns x_pi (reachable pairs only), f_hiy,
// t_jhi and u_phiy.
class LinearModel {
 public:
  static constexpr int kOmitted = -1;

  milp::Problem problem;  // columns and rows; objective left empty
  std::array<std::vector<milp::Term>, kNumObjectives> objectives;

  std::size_t num_sites = 0;
  std::size_t num_generators = 0;
  std::size_t num_fractions = 0;
  std::size_t num_frequencies = 0;
  std::size_t num_bins = 0;

  int x_col(std::size_t p, std::size_t i) const { return x_cols_[p * num_sites + i]; }
  int f_col(std::size_t h, std::size_t i, std::size_t y) const {
    return f_cols_[(h * num_sites + i) * num_frequencies + y];
  }
  int t_col(std::size_t j, std::size_t h, std::size_t i) const {
    return t_cols_[(j * num_fractions + h) * num_sites + i];
  }
  int u_col(std::size_t p, std::size_t h, std::size_t i, std::size_t y) const {
    return u_cols_[((p * num_fractions + h) * num_sites + i) * num_frequencies + y];
  }

  std::size_t count_x() const;
  std::size_t count_f() const { return f_cols_.size(); }
  std::size_t count_t() const { return t_cols_.size(); }
  std::size_t count_u() const { return u_cols_.size(); }

  // Column vector for a solution; u is pinned to max(0, 1 - x - f).
  std::vector<double> encode(const Solution& sol) const;
  // Reads integer columns back (rounding to nearest).
  Solution decode(std::span<const double> values) const;

  double objective_value(std::size_t k, std::span<const double> values) const {
    return milp::evaluate(objectives[k], values);
  }

  // Copy of `problem` minimizing objective k.
  milp::Problem minimize(std::size_t k) const;

 private:
  friend LinearModel build_linear_model(const Scenario& s);

  std::vector<int> x_cols_;
  std::vector<int> f_cols_;
  std::vector<int> t_cols_;
  std::vector<int> u_cols_;
};

LinearModel build_linear_model(const Scenario& s);

// Bin count vector over (bin type, fraction): counts[j * |H| + h].
struct BinChoice {
  std::vector<int> counts;
  double cost = 0.0;
  double footprint = 0.0;
  int num_bins = 0;
};

// All count vectors over bin types whose footprint fits in `space`,
// enumerated with each count bounded by floor(space / e_j).
std::vector<std::vector<int>> enumerate_bin_configurations(const Scenario& s, double space);

// Cheapest bins at `site` with per-fraction capacity >= demand[h] and total
// footprint within the site's space. Ties: smaller footprint, then fewer
// bins, then the lexicographically smallest count vector.
std::optional<BinChoice> min_cost_bins(const Scenario& s, std::size_t site,
                                       std::span<const double> demand);

}  // namespace gaploc

#endif  // GAPLOC_MODEL_HPP_
