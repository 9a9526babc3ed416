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

#include "gaploc/ranges.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "gaploc/errors.hpp"
#include "gaploc/parallel.hpp"
#include "gaploc/warnings.hpp"

namespace gaploc {

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

double StageMargin(double v) { return 1e-9 * std::max(1.0, std::abs(v)); }

void Finish(const Scenario& s, const LinearModel& model, const milp::Result& res,
            MethodReport& report) {
  report.status = res.status;
  if (!res.has_solution()) return;
  report.solution = model.decode(res.values);
  report.objectives = eval_objectives(s, *report.solution);
}

void CheckObjective(std::size_t k) {
  if (k >= kNumObjectives) {
    throw ValidationError("objective index " + std::to_string(k + 1) + " is not in {1, 2, 3}");
  }
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kSingleObjective:
      return "single";
    case Method::kWeightedSum:
      return "weighted";
    case Method::kLexicographic:
      return "lex";
    case Method::kLexicographicWarm:
      return "lex-warm";
  }
  return "unknown";
}

MethodReport single_objective(const Scenario& s, std::size_t k, const milp::SolveOptions& opts) {
  CheckObjective(k);
  const auto start = Clock::now();
  MethodReport report;
  report.method = Method::kSingleObjective;
  report.order = {k};
  const LinearModel model = build_linear_model(s);
  const milp::Result res = milp::solve(model.minimize(k), opts);
  Finish(s, model, res, report);
  StageTrace stage{k, res.status, 0.0, std::nullopt, res.stats.nodes, res.stats.wall_seconds};
  if (report.solution) stage.value = report.objectives[k];
  report.stages.push_back(stage);
  report.wall_seconds = Seconds(start);
  return report;
}

Payoff payoff_from(std::span<const MethodReport> single_runs) {
  Payoff p;
  p.best.fill(std::numeric_limits<double>::infinity());
  p.worst.fill(-std::numeric_limits<double>::infinity());
  bool any = false;
  for (const auto& r : single_runs) {
    if (!r.has_solution()) continue;
    any = true;
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      p.best[k] = std::min(p.best[k], r.objectives[k]);
      p.worst[k] = std::max(p.worst[k], r.objectives[k]);
    }
  }
  if (!any) throw EmptyPool("no single-objective run produced a solution");
  return p;
}

std::array<double, kNumObjectives> default_weights(std::size_t k_prime) {
  std::array<double, kNumObjectives> w{1.0, 1.0, 1.0};
  w[k_prime] = 1000.0;
  return w;
}

MethodReport weighted_sum(const Scenario& s, std::size_t k_prime, const Payoff& payoff,
                          const milp::SolveOptions& opts,
                          std::optional<std::array<double, kNumObjectives>> weights) {
  CheckObjective(k_prime);
  const auto start = Clock::now();
  const auto w = weights.value_or(default_weights(k_prime));
  MethodReport report;
  report.method = Method::kWeightedSum;
  report.order = {k_prime};

  const LinearModel model = build_linear_model(s);
  milp::Problem prob = model.problem;
  bool any = false;
  for (std::size_t k = 0; k < kNumObjectives; ++k) {
    const double range = payoff.worst[k] - payoff.best[k];
    if (!(range > 0.0)) {
      warn("objective " + std::to_string(k + 1) +
           " has a zero-width payoff range; dropped from the weighted sum");
      continue;
    }
    any = true;
    const double scale = w[k] / range;
    for (const auto& t : model.objectives[k]) prob.objective.push_back({t.col, t.coef * scale});
    prob.objective_offset -= payoff.best[k] * scale;
  }
  if (!any) throw DegenerateRange("every payoff range has zero width");

  const milp::Result res = milp::solve(prob, opts);
  Finish(s, model, res, report);
  report.stages.push_back(
      {k_prime, res.status, res.objective, std::nullopt, res.stats.nodes, res.stats.wall_seconds});
  report.wall_seconds = Seconds(start);
  return report;
}

MethodReport lexicographic(const Scenario& s, std::span<const std::size_t> order, bool warm,
                           const milp::SolveOptions& opts) {
  if (order.empty() || order.size() > kNumObjectives) {
    throw ValidationError("lexicographic order must list 1 to 3 objectives");
  }
  for (std::size_t m = 0; m < order.size(); ++m) {
    CheckObjective(order[m]);
    if (std::find(order.begin(), order.begin() + static_cast<long>(m), order[m]) !=
        order.begin() + static_cast<long>(m)) {
      throw ValidationError("lexicographic order repeats objective " +
                            std::to_string(order[m] + 1));
    }
  }
  const auto start = Clock::now();
  MethodReport report;
  report.method = warm ? Method::kLexicographicWarm : Method::kLexicographic;
  report.order.assign(order.begin(), order.end());

  const LinearModel model = build_linear_model(s);
  milp::Problem prob = model.problem;
  std::optional<std::vector<double>> incumbent;
  for (std::size_t m = 0; m < order.size(); ++m) {
    const std::size_t k = order[m];
    prob.objective = model.objectives[k];
    milp::SolveOptions stage_opts = opts;
    StageTrace stage;
    stage.objective = k;
    if (warm && incumbent) {
      stage_opts.warm_start = incumbent;
      stage.incumbent = model.objective_value(k, *incumbent);
    }
    const milp::Result res = milp::solve(prob, stage_opts);
    stage.status = res.status;
    stage.nodes = res.stats.nodes;
    stage.wall_seconds = res.stats.wall_seconds;
    if (!res.has_solution()) {
      report.status = res.status;
      report.stages.push_back(stage);
      report.wall_seconds = Seconds(start);
      throw StageFailed("lexicographic stage " + std::to_string(m + 1) + " (objective " +
                        std::to_string(k + 1) + ") ended without a solution: " +
                        std::string(milp::status_name(res.status)));
    }
    // Re-encode so the next stage starts from exact integral values.
    incumbent = model.encode(model.decode(res.values));
    stage.value = model.objective_value(k, *incumbent);
    report.stages.push_back(stage);
    prob.add_row("stage" + std::to_string(m + 1) + "[f" + std::to_string(k + 1) + "]",
                 model.objectives[k], milp::Sense::kLessEqual,
                 stage.value + StageMargin(stage.value));
    report.status = res.status;
  }
  report.solution = model.decode(*incumbent);
  report.objectives = eval_objectives(s, *report.solution);
  report.wall_seconds = Seconds(start);
  return report;
}

void mark_dominance(std::vector<MethodReport>& reports) {
  for (auto& r : reports) {
    r.dominated = false;
    if (!r.has_solution()) continue;
    for (const auto& other : reports) {
      if (&other != &r && other.has_solution() && dominates(other.objectives, r.objectives)) {
        r.dominated = true;
        break;
      }
    }
  }
}

Ranges build_ranges(std::span<const MethodReport> reports) {
  std::vector<ObjectiveVector> pool;
  for (const auto& r : reports) {
    if (r.has_solution()) pool.push_back(r.objectives);
  }
  Ranges out;
  bool any = false;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    const bool dominated = std::any_of(pool.begin(), pool.end(), [&](const ObjectiveVector& b) {
      return dominates(b, pool[a]);
    });
    if (dominated) continue;
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      if (!any) {
        out[k] = {pool[a][k], pool[a][k]};
      } else {
        out[k].ideal = std::min(out[k].ideal, pool[a][k]);
        out[k].nadir = std::max(out[k].nadir, pool[a][k]);
      }
    }
    any = true;
  }
  if (!any) throw EmptyPool("no non-dominated report to build ranges from");
  return out;
}

std::vector<MethodReport> run_methods(const Scenario& s, const MethodSelection& which,
                                      const milp::SolveOptions& opts, unsigned threads) {
  std::vector<MethodReport> singles(kNumObjectives);
  if (which.single || which.weighted) {
    parallel_for(kNumObjectives, threads, [&](std::size_t k) {
      try {
        singles[k] = single_objective(s, k, opts);
      } catch (const Error& e) {
        singles[k].order = {k};
        singles[k].error = e.what();
      }
    });
  }

  struct Task {
    Method method;
    std::vector<std::size_t> order;
  };
  std::vector<Task> tasks;
  if (which.weighted) {
    for (std::size_t k = 0; k < kNumObjectives; ++k) tasks.push_back({Method::kWeightedSum, {k}});
  }
  std::vector<std::size_t> perm{0, 1, 2};
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  if (which.lexicographic) {
    for (const auto& p : perms) tasks.push_back({Method::kLexicographic, p});
  }
  if (which.lexicographic_warm) {
    for (const auto& p : perms) tasks.push_back({Method::kLexicographicWarm, p});
  }

  std::optional<Payoff> payoff;
  std::string payoff_error;
  if (which.weighted) {
    try {
      payoff = payoff_from(singles);
    } catch (const Error& e) {
      payoff_error = e.what();
    }
  }

  std::vector<MethodReport> results(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t t) {
    const Task& task = tasks[t];
    MethodReport& out = results[t];
    const auto start = Clock::now();
    try {
      if (task.method == Method::kWeightedSum) {
        if (!payoff) throw EmptyPool(payoff_error);
        out = weighted_sum(s, task.order[0], *payoff, opts);
      } else {
        out = lexicographic(s, task.order, task.method == Method::kLexicographicWarm, opts);
      }
    } catch (const Error& e) {
      out = MethodReport{};
      out.method = task.method;
      out.order = task.order;
      out.error = e.what();
      out.wall_seconds = Seconds(start);
    }
  });

  std::vector<MethodReport> reports;
  if (which.single) reports = std::move(singles);
  for (auto& r : results) reports.push_back(std::move(r));
  mark_dominance(reports);
  return reports;
}

}  // namespace gaploc
