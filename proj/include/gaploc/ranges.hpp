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

#ifndef GAPLOC_RANGES_HPP_
#define GAPLOC_RANGES_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gaploc/metrics.hpp"
#include "gaploc/milp.hpp"
#include "gaploc/model.hpp"
#include "gaploc/scenario.hpp"

namespace gaploc {

enum class Method { kSingleObjective, kWeightedSum, kLexicographic, kLexicographicWarm };

std::string_view method_name(Method method);

struct StageTrace {
  std::size_t objective = 0;
  milp::Status status = milp::Status::kNoSolutionFound;
  double value = 0.0;                  // stage objective at the stage solution
  std::optional<double> incumbent;     // warm-start objective, if any
  long nodes = 0;
  double wall_seconds = 0.0;
};

// Objective indices are 0-based throughout (0 = f1).
struct MethodReport {
  Method method = Method::kSingleObjective;
  std::vector<std::size_t> order;
  milp::Status status = milp::Status::kNoSolutionFound;
  std::optional<Solution> solution;
  ObjectiveVector objectives;
  double wall_seconds = 0.0;
  bool dominated = false;
  std::vector<StageTrace> stages;
  std::string error;  // set when the run failed

  bool has_solution() const { return solution.has_value(); }
};

MethodReport single_objective(const Scenario& s, std::size_t k,
                              const milp::SolveOptions& opts = {});

// Best and worst value of each objective across single-objective runs.
struct Payoff {
  std::array<double, kNumObjectives> best{};
  std::array<double, kNumObjectives> worst{};
};

// Throws EmptyPool when no report carries a solution.
Payoff payoff_from(std::span<const MethodReport> single_runs);

// Default weights: 1000 on k_prime and 1 elsewhere.
std::array<double, kNumObjectives> default_weights(std::size_t k_prime);

// Minimizes sum_k w_k (Obj_k - best_k) / (worst_k - best_k). Zero-width
// terms are dropped with a warning; DegenerateRange when all are zero.
MethodReport weighted_sum(const Scenario& s, std::size_t k_prime, const Payoff& payoff,
                          const milp::SolveOptions& opts = {},
                          std::optional<std::array<double, kNumObjectives>> weights = {});

// Stage m minimizes Obj_order[m] with Obj_order[j] <= v_j for j < m. With
// `warm`, stage m starts from stage m-1's solution. Throws StageFailed when a
// stage ends without a solution.
MethodReport lexicographic(const Scenario& s, std::span<const std::size_t> order, bool warm,
                           const milp::SolveOptions& opts = {});

// Sets `dominated` on every report against the others carrying a solution.
void mark_dominance(std::vector<MethodReport>& reports);

// Ideal = min and nadir = max over non-dominated reports with a solution.
Ranges build_ranges(std::span<const MethodReport> reports);

struct MethodSelection {
  bool single = true;
  bool weighted = true;
  bool lexicographic = true;
  bool lexicographic_warm = true;
};

// Runs the selected methods (3 single, 3 weighted, 6 orders of each
// lexicographic flavour), in a fixed order, on up to `threads` workers.
// Failed runs are kept with `error` set. Dominance is marked on return.
std::vector<MethodReport> run_methods(const Scenario& s, const MethodSelection& which,
                                      const milp::SolveOptions& opts, unsigned threads = 1);

}  // namespace gaploc

#endif  // GAPLOC_RANGES_HPP_
