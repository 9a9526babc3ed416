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

#ifndef GAPLOC_AUGMECON_HPP_
#define GAPLOC_AUGMECON_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "gaploc/metrics.hpp"
#include "gaploc/milp.hpp"
#include "gaploc/model.hpp"
#include "gaploc/scenario.hpp"

namespace gaploc {

struct GridSpec {
  int gridpoints = 2;
  std::size_t main_objective = 0;  // 0-based; 0 = f1
  double augmentation_delta = 1e-3;
};

// The two constrained objectives: `inner` (slack weight 1, used by the
// bypass) and `outer` (slack weight 0.1).
struct ConstrainedPair {
  std::size_t inner = 1;
  std::size_t outer = 2;
};

ConstrainedPair constrained_objectives(std::size_t main_objective);

struct Scalarized {
  milp::Problem problem;
  int slack_inner = -1;
  int slack_outer = -1;
};

// min Obj_m - delta (S_in / r_in + 0.1 S_out / r_out)
// s.t. Obj_in + S_in = eps_in, Obj_out + S_out = eps_out, S >= 0.
// A zero range drops that slack from the objective.
Scalarized scalarize(const LinearModel& model, const Ranges& ranges, const GridSpec& grid,
                     double eps_inner, double eps_outer);
Scalarized scalarize(const Scenario& s, const Ranges& ranges, const GridSpec& grid,
                     double eps_inner, double eps_outer);

struct CellRecord {
  int outer = 0;  // grid index, 0 = nadir
  int inner = 0;
  double eps_outer = 0.0;
  double eps_inner = 0.0;
  milp::Status status = milp::Status::kNoSolutionFound;
  long nodes = 0;
  double wall_seconds = 0.0;
  int bypass = 0;  // inner cells skipped after this one
};

struct FrontEntry {
  Solution solution;
  ObjectiveVector objectives;
  int outer = 0;
  int inner = 0;
  milp::Stats stats;
};

struct ParetoFront {
  std::vector<FrontEntry> entries;
  std::vector<CellRecord> cells;  // one per solver call, in cell order
  long solver_calls = 0;
  long run_bound = 0;  // (g+1)^2, collapsed loops counting once
};

struct AugmeconOptions {
  milp::SolveOptions solve;
  // Solves every cell concurrently; bypass and early exit are disabled.
  bool parallel = false;
  unsigned threads = 1;
};

// Throws ValidationError for g < 1 or delta outside (0, 1e-2].
ParetoFront augmecon2(const Scenario& s, const Ranges& ranges, const GridSpec& grid,
                      const AugmeconOptions& opts = {});

}  // namespace gaploc

#endif  // GAPLOC_AUGMECON_HPP_
