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
#include <chrono>
#include <cmath>
#include <queue>

#include "gaploc/errors.hpp"
#include "gaploc/milp.hpp"
#include "simplex.hpp"

namespace gaploc::milp {

namespace {

using detail::Basis;
using detail::BoundedSimplex;
using detail::LpStatus;

constexpr double kResidualFraction = 1e-12;

bool IsIntegral(VarKind kind) { return kind != VarKind::kContinuous; }

void CheckWellFormed(const Problem& p) {
  const int n = p.num_cols();
  for (const Variable& v : p.variables) {
    if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower > v.upper) {
      throw MalformedProblem("variable '" + v.name + "' has inconsistent bounds");
    }
    if (v.lower == kInfinity || v.upper == -kInfinity) {
      throw MalformedProblem("variable '" + v.name + "' has an empty domain");
    }
    if (v.kind == VarKind::kBinary && (v.lower < 0.0 || v.upper > 1.0)) {
      throw MalformedProblem("binary variable '" + v.name + "' has bounds outside [0, 1]");
    }
  }
  auto check_terms = [n](const std::vector<Term>& terms, const std::string& where) {
    for (const Term& t : terms) {
      if (t.col < 0 || t.col >= n) {
        throw MalformedProblem(where + " references column " + std::to_string(t.col));
      }
      if (!std::isfinite(t.coef)) throw MalformedProblem(where + " has a non-finite coefficient");
    }
  };
  for (const Row& r : p.rows) {
    check_terms(r.terms, "row '" + r.name + "'");
    if (!std::isfinite(r.rhs)) throw MalformedProblem("row '" + r.name + "' has a non-finite rhs");
  }
  check_terms(p.objective, "objective");
  if (!std::isfinite(p.objective_offset)) throw MalformedProblem("non-finite objective offset");
}

struct Node {
  double bound = -kInfinity;
  int depth = 0;
  long id = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  Basis basis;
};

// Best bound first; deeper nodes, then older nodes, win ties.
struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

class BranchAndBound {
 public:
  BranchAndBound(const Problem& problem, const SolveOptions& options)
      : problem_(problem), options_(options), lp_(problem),
        start_(std::chrono::steady_clock::now()) {}

  Result Run(const std::vector<double>* warm_start);

 private:
  double Elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  double Cutoff() const {
    if (!has_incumbent_) return kInfinity;
    return incumbent_obj_ -
           std::max(options_.absolute_gap, options_.relative_gap * std::abs(incumbent_obj_));
  }
  int SelectBranchVariable(std::span<const double> x, double threshold) const;
  // Returns false when the rounded point cannot be made feasible.
  bool TryIncumbent(std::span<const double> x, const Node& node, long lp_limit);
  double OpenBound(double current) const {
    double b = current;
    if (!open_.empty()) b = std::min(b, open_.top().bound);
    return b;
  }

  const Problem& problem_;
  const SolveOptions& options_;
  BoundedSimplex lp_;
  std::chrono::steady_clock::time_point start_;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open_;
  bool has_incumbent_ = false;
  double incumbent_obj_ = kInfinity;
  std::vector<double> incumbent_;
  double pruned_bound_ = kInfinity;
  long next_id_ = 0;
  Stats stats_;
};

int BranchAndBound::SelectBranchVariable(std::span<const double> x, double threshold) const {
  int best = -1;
  double best_score = threshold;
  for (int j = 0; j < problem_.num_cols(); ++j) {
    if (!IsIntegral(problem_.variables[static_cast<size_t>(j)].kind)) continue;
    const double v = x[static_cast<size_t>(j)];
    const double score = std::min(v - std::floor(v), std::ceil(v) - v);
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

bool BranchAndBound::TryIncumbent(std::span<const double> x, const Node& node, long lp_limit) {
  std::vector<double> values(x.begin(), x.end());
  bool rounded = false;
  for (int j = 0; j < problem_.num_cols(); ++j) {
    auto& v = values[static_cast<size_t>(j)];
    if (IsIntegral(problem_.variables[static_cast<size_t>(j)].kind) && v != std::round(v)) {
      v = std::round(v);
      rounded = true;
    }
  }
  if (rounded && max_violation(problem_, values, true) > 1e-6) {
    // Re-optimize the continuous columns with the integers fixed at their
    // rounded values.
    std::vector<double> lo = node.lower, up = node.upper;
    for (int j = 0; j < problem_.num_cols(); ++j) {
      if (IsIntegral(problem_.variables[static_cast<size_t>(j)].kind)) {
        lo[static_cast<size_t>(j)] = up[static_cast<size_t>(j)] = values[static_cast<size_t>(j)];
      }
    }
    lp_.set_bounds(lo, up);
    lp_.set_basis(Basis{});
    const long before = lp_.iterations();
    const LpStatus st = lp_.solve(lp_limit);
    stats_.lp_iterations += lp_.iterations() - before;
    if (st != LpStatus::kOptimal) return false;
    const auto polished = lp_.values();
    values.assign(polished.begin(), polished.end());
    for (int j = 0; j < problem_.num_cols(); ++j) {
      if (IsIntegral(problem_.variables[static_cast<size_t>(j)].kind)) {
        values[static_cast<size_t>(j)] = std::round(values[static_cast<size_t>(j)]);
      }
    }
  }
  if (max_violation(problem_, values, true) > 1e-6) return false;
  const double obj = evaluate(problem_.objective, values) + problem_.objective_offset;
  if (!has_incumbent_ || obj < incumbent_obj_) {
    has_incumbent_ = true;
    incumbent_obj_ = obj;
    incumbent_ = std::move(values);
  }
  return true;
}

Result BranchAndBound::Run(const std::vector<double>* warm_start) {
  Result result;
  const int n = problem_.num_cols();
  const double offset = problem_.objective_offset;

  if (warm_start) {
    has_incumbent_ = true;
    incumbent_ = *warm_start;
    incumbent_obj_ = evaluate(problem_.objective, incumbent_) + offset;
  }

  Node root;
  root.id = next_id_++;
  root.lower.resize(static_cast<size_t>(n));
  root.upper.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Variable& v = problem_.variables[static_cast<size_t>(j)];
    double lo = v.lower;
    double up = v.upper;
    if (IsIntegral(v.kind)) {
      lo = std::ceil(lo - options_.integer_tolerance);
      up = std::floor(up + options_.integer_tolerance);
    }
    root.lower[static_cast<size_t>(j)] = lo;
    root.upper[static_cast<size_t>(j)] = up;
  }

  bool diving = warm_start != nullptr;
  bool limit_hit = options_.time_limit_s <= 0.0 || options_.node_limit <= 0;
  bool root_done = false;
  std::optional<Node> current;
  if (!limit_hit) current = std::move(root);
  const long lp_limit = 200L * (n + problem_.num_rows()) + 1000;

  while (current) {
    Node node = std::move(*current);
    current.reset();
    if (node.bound >= Cutoff()) {
      pruned_bound_ = std::min(pruned_bound_, node.bound);
    } else {
      stats_.bound_trace.push_back(std::min(OpenBound(node.bound), incumbent_obj_));

      lp_.set_bounds(node.lower, node.upper);
      if (!node.basis.head.empty()) lp_.set_basis(node.basis);
      const long before = lp_.iterations();
      const LpStatus st = lp_.solve(lp_limit);
      stats_.lp_iterations += lp_.iterations() - before;
      ++stats_.nodes;

      if (st == LpStatus::kIterationLimit) {
        throw Error("LP relaxation did not converge at branch-and-bound node " +
                    std::to_string(node.id));
      }
      if (st == LpStatus::kUnbounded) {
        result.status = Status::kUnbounded;
        stats_.wall_seconds = Elapsed();
        result.stats = std::move(stats_);
        return result;
      }
      if (st == LpStatus::kOptimal) {
        const double z = lp_.objective() + offset;
        const double node_bound = std::max(z, node.bound);
        if (node_bound >= Cutoff()) {
          pruned_bound_ = std::min(pruned_bound_, node_bound);
        } else {
          const auto lp_x = lp_.values();
          const std::vector<double> x(lp_x.begin(), lp_x.end());
          Basis basis = lp_.basis();
          int j = SelectBranchVariable(x, options_.integer_tolerance);
          // A point integral within tolerance whose rounding cannot be
          // repaired is branched on its residual fractions instead.
          if (j < 0 && !TryIncumbent(x, node, lp_limit)) {
            j = SelectBranchVariable(x, kResidualFraction);
            if (j < 0) {
              throw Error("integral relaxation at branch-and-bound node " +
                          std::to_string(node.id) + " could not be made feasible");
            }
          }
          if (j >= 0) {
            const double v = x[static_cast<size_t>(j)];
            Node down{node_bound, node.depth + 1, next_id_++, node.lower, node.upper, basis};
            down.upper[static_cast<size_t>(j)] = std::floor(v);
            Node up{node_bound, node.depth + 1, next_id_++, std::move(node.lower),
                    std::move(node.upper), std::move(basis)};
            up.lower[static_cast<size_t>(j)] = std::ceil(v);
            if (diving) {
              const bool go_down = (*warm_start)[static_cast<size_t>(j)] <= std::floor(v);
              current = go_down ? std::move(down) : std::move(up);
              open_.push(go_down ? std::move(up) : std::move(down));
            } else {
              open_.push(std::move(down));
              open_.push(std::move(up));
            }
          }
        }
      }
      root_done = true;
    }

    if (!current) {
      diving = false;
      if (!open_.empty()) {
        current = open_.top();
        open_.pop();
      }
    }
    if (current && (Elapsed() > options_.time_limit_s || stats_.nodes >= options_.node_limit)) {
      limit_hit = true;
      open_.push(std::move(*current));
      current.reset();
    }
  }

  double bound = std::min(pruned_bound_, incumbent_obj_);
  if (!open_.empty()) bound = std::min(bound, open_.top().bound);
  if (limit_hit && !root_done) bound = -kInfinity;

  if (has_incumbent_) {
    result.values = incumbent_;
    result.objective = incumbent_obj_;
    result.status = limit_hit ? Status::kFeasibleTimeLimit : Status::kOptimal;
    result.best_bound = limit_hit ? bound : std::min(bound, incumbent_obj_);
  } else {
    result.status = limit_hit ? Status::kNoSolutionFound : Status::kInfeasible;
    result.best_bound = limit_hit ? bound : kInfinity;
  }
  stats_.wall_seconds = Elapsed();
  result.stats = std::move(stats_);
  return result;
}

}  // namespace

int Problem::add_variable(std::string name, VarKind kind, double lower, double upper) {
  variables.push_back(Variable{std::move(name), kind, lower, upper});
  return num_cols() - 1;
}

int Problem::add_row(std::string name, std::vector<Term> terms, Sense sense, double rhs) {
  rows.push_back(Row{std::move(name), std::move(terms), sense, rhs});
  return num_rows() - 1;
}

std::string_view status_name(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "Optimal";
    case Status::kFeasibleTimeLimit:
      return "FeasibleTimeLimit";
    case Status::kInfeasible:
      return "Infeasible";
    case Status::kUnbounded:
      return "Unbounded";
    case Status::kNoSolutionFound:
      return "NoSolutionFound";
  }
  return "Unknown";
}

double evaluate(std::span<const Term> terms, std::span<const double> values) {
  double s = 0.0;
  for (const Term& t : terms) s += t.coef * values[static_cast<size_t>(t.col)];
  return s;
}

double max_violation(const Problem& problem, std::span<const double> values,
                     bool check_integrality) {
  double worst = 0.0;
  for (int j = 0; j < problem.num_cols(); ++j) {
    const Variable& v = problem.variables[static_cast<size_t>(j)];
    const double x = values[static_cast<size_t>(j)];
    if (!std::isfinite(x)) return kInfinity;
    worst = std::max({worst, v.lower - x, x - v.upper});
    if (check_integrality && IsIntegral(v.kind)) worst = std::max(worst, std::abs(x - std::round(x)));
  }
  for (const Row& r : problem.rows) {
    const double a = evaluate(r.terms, values);
    switch (r.sense) {
      case Sense::kLessEqual:
        worst = std::max(worst, a - r.rhs);
        break;
      case Sense::kGreaterEqual:
        worst = std::max(worst, r.rhs - a);
        break;
      case Sense::kEqual:
        worst = std::max(worst, std::abs(a - r.rhs));
        break;
    }
  }
  return worst;
}

Result solve(const Problem& problem, const SolveOptions& options) {
  CheckWellFormed(problem);
  if (!(options.integer_tolerance > 0.0) || !(options.relative_gap >= 0.0) ||
      !(options.absolute_gap >= 0.0) || std::isnan(options.time_limit_s)) {
    throw MalformedProblem("invalid solve options");
  }
  const std::vector<double>* warm = nullptr;
  if (options.warm_start) {
    warm = &*options.warm_start;
  } else if (problem.warm_start) {
    warm = &*problem.warm_start;
  }
  if (warm) {
    if (warm->size() != problem.variables.size()) {
      throw InfeasibleWarmStart("warm start has " + std::to_string(warm->size()) +
                                " entries for " + std::to_string(problem.num_cols()) +
                                " columns");
    }
    const double viol = max_violation(problem, *warm, true);
    if (viol > std::max(1e-6, options.integer_tolerance)) {
      throw InfeasibleWarmStart("warm start violates the problem by " + std::to_string(viol));
    }
  }
  BranchAndBound bb(problem, options);
  return bb.Run(warm);
}

}  // namespace gaploc::milp
