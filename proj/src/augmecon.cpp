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

#include "gaploc/augmecon.hpp"

#include <cmath>
#include <string>

#include "gaploc/errors.hpp"
#include "gaploc/parallel.hpp"

namespace gaploc {

namespace {

double EpsMargin(double eps) { return 1e-9 * std::max(1.0, std::abs(eps)); }

struct Axis {
  std::size_t objective = 0;
  double nadir = 0.0;
  double ideal = 0.0;
  double step = 0.0;
  int points = 0;  // last grid index

  double eps(int k) const { return k == points ? ideal : nadir - k * step; }
};

Axis MakeAxis(std::size_t k, const Ranges& ranges, int g) {
  Axis a;
  a.objective = k;
  a.nadir = ranges[k].nadir;
  a.ideal = ranges[k].ideal;
  const double r = a.nadir - a.ideal;
  if (r > 0.0) {
    a.points = g;
    a.step = r / g;
  }
  return a;
}

struct CellOutcome {
  CellRecord record;
  std::optional<FrontEntry> entry;
  double slack_inner = 0.0;
};

CellOutcome SolveCell(const Scenario& s, const LinearModel& model, const Ranges& ranges,
                      const GridSpec& grid, const AugmeconOptions& opts, const Axis& inner,
                      const Axis& outer, int o, int i) {
  CellOutcome out;
  out.record.outer = o;
  out.record.inner = i;
  out.record.eps_outer = outer.eps(o);
  out.record.eps_inner = inner.eps(i);
  const Scalarized sc = scalarize(model, ranges, grid, out.record.eps_inner, out.record.eps_outer);
  const milp::Result res = milp::solve(sc.problem, opts.solve);
  out.record.status = res.status;
  out.record.nodes = res.stats.nodes;
  out.record.wall_seconds = res.stats.wall_seconds;
  if (!res.has_solution()) return out;
  FrontEntry e;
  e.solution = model.decode(res.values);
  e.objectives = eval_objectives(s, e.solution);
  e.outer = o;
  e.inner = i;
  e.stats = res.stats;
  const double eps = out.record.eps_inner;
  out.slack_inner = eps + EpsMargin(eps) - e.objectives[inner.objective];
  out.entry = std::move(e);
  return out;
}

}  // namespace

ConstrainedPair constrained_objectives(std::size_t main_objective) {
  switch (main_objective) {
    case 0:
      return {1, 2};
    case 1:
      return {0, 2};
    case 2:
      return {0, 1};
  }
  throw ValidationError("main objective must be 1, 2 or 3");
}

Scalarized scalarize(const LinearModel& model, const Ranges& ranges, const GridSpec& grid,
                     double eps_inner, double eps_outer) {
  const ConstrainedPair pair = constrained_objectives(grid.main_objective);
  Scalarized out;
  out.problem = model.problem;
  milp::Problem& prob = out.problem;
  out.slack_inner = prob.add_variable("s_inner", milp::VarKind::kContinuous, 0.0, milp::kInfinity);
  out.slack_outer = prob.add_variable("s_outer", milp::VarKind::kContinuous, 0.0, milp::kInfinity);

  auto constrain = [&](std::size_t k, int slack, double eps, const char* name) {
    std::vector<milp::Term> terms = model.objectives[k];
    terms.push_back({slack, 1.0});
    prob.add_row(name, std::move(terms), milp::Sense::kEqual, eps + EpsMargin(eps));
  };
  constrain(pair.inner, out.slack_inner, eps_inner, "eps_inner");
  constrain(pair.outer, out.slack_outer, eps_outer, "eps_outer");

  prob.objective = model.objectives[grid.main_objective];
  const double r_in = ranges[pair.inner].nadir - ranges[pair.inner].ideal;
  const double r_out = ranges[pair.outer].nadir - ranges[pair.outer].ideal;
  if (r_in > 0.0) prob.objective.push_back({out.slack_inner, -grid.augmentation_delta / r_in});
  if (r_out > 0.0) {
    prob.objective.push_back({out.slack_outer, -0.1 * grid.augmentation_delta / r_out});
  }
  return out;
}

Scalarized scalarize(const Scenario& s, const Ranges& ranges, const GridSpec& grid,
                     double eps_inner, double eps_outer) {
  return scalarize(build_linear_model(s), ranges, grid, eps_inner, eps_outer);
}

ParetoFront augmecon2(const Scenario& s, const Ranges& ranges, const GridSpec& grid,
                      const AugmeconOptions& opts) {
  if (grid.gridpoints < 1) throw ValidationError("gridpoints must be at least 1");
  if (!(grid.augmentation_delta > 0.0 && grid.augmentation_delta <= 1e-2)) {
    throw ValidationError("augmentation delta must lie in (0, 1e-2]");
  }
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    if (!std::isfinite(ranges[k].ideal) || !std::isfinite(ranges[k].nadir) ||
        ranges[k].nadir < ranges[k].ideal) {
      throw ValidationError("range of objective " + std::to_string(k + 1) + " is invalid");
    }
  }
  const ConstrainedPair pair = constrained_objectives(grid.main_objective);
  const Axis inner = MakeAxis(pair.inner, ranges, grid.gridpoints);
  const Axis outer = MakeAxis(pair.outer, ranges, grid.gridpoints);
  const LinearModel model = build_linear_model(s);

  ParetoFront front;
  front.run_bound = static_cast<long>(inner.points + 1) * (outer.points + 1);
  std::vector<FrontEntry> found;

  if (opts.parallel) {
    const int width = inner.points + 1;
    std::vector<CellOutcome> cells(static_cast<std::size_t>(front.run_bound));
    parallel_for(cells.size(), opts.threads, [&](std::size_t c) {
      const int o = static_cast<int>(c) / width;
      const int i = static_cast<int>(c) % width;
      cells[c] = SolveCell(s, model, ranges, grid, opts, inner, outer, o, i);
    });
    for (auto& c : cells) {
      front.cells.push_back(c.record);
      if (c.entry) found.push_back(std::move(*c.entry));
    }
  } else {
    for (int o = 0; o <= outer.points; ++o) {
      int i = 0;
      while (i <= inner.points) {
        CellOutcome c = SolveCell(s, model, ranges, grid, opts, inner, outer, o, i);
        const milp::Status status = c.record.status;
        if (status == milp::Status::kInfeasible) {
          front.cells.push_back(c.record);
          break;
        }
        int bypass = 0;
        if (c.entry && inner.points > 0) {
          bypass = static_cast<int>(std::floor(c.slack_inner / inner.step + 1e-9));
          bypass = std::max(0, bypass);
        }
        c.record.bypass = bypass;
        front.cells.push_back(c.record);
        if (c.entry) found.push_back(std::move(*c.entry));
        i += bypass + 1;
      }
    }
  }
  front.solver_calls = static_cast<long>(front.cells.size());

  std::vector<ObjectiveVector> pts;
  for (const auto& e : found) pts.push_back(e.objectives);
  for (std::size_t k : pareto_filter(pts)) front.entries.push_back(std::move(found[k]));
  return front;
}

}  // namespace gaploc
