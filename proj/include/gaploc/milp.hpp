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

#ifndef GAPLOC_MILP_HPP_
#define GAPLOC_MILP_HPP_

#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaploc::milp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class VarKind { kContinuous, kInteger, kBinary };
enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Variable {
  std::string name;
  VarKind kind = VarKind::kContinuous;
  double lower = 0.0;
  double upper = kInfinity;
};

struct Term {
  int col = 0;
  double coef = 0.0;
};

struct Row {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

// min objective . x  s.t. rows, bounds, integrality. Always a minimization.
struct Problem {
  std::vector<Variable> variables;
  std::vector<Row> rows;
  std::vector<Term> objective;
  double objective_offset = 0.0;
  std::optional<std::vector<double>> warm_start;

  int add_variable(std::string name, VarKind kind, double lower, double upper);
  int add_row(std::string name, std::vector<Term> terms, Sense sense, double rhs);
  int num_cols() const { return static_cast<int>(variables.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class Status { kOptimal, kFeasibleTimeLimit, kInfeasible, kUnbounded, kNoSolutionFound };

std::string_view status_name(Status status);

struct Stats {
  long nodes = 0;
  long lp_iterations = 0;
  double wall_seconds = 0.0;
  // Global dual bound recorded each time a node is taken off the queue.
  std::vector<double> bound_trace;
};

struct Result {
  Status status = Status::kNoSolutionFound;
  std::vector<double> values;  // empty unless a solution is reported
  double objective = kInfinity;
  double best_bound = -kInfinity;
  Stats stats;

  bool has_solution() const { return !values.empty(); }
};

struct SolveOptions {
  double time_limit_s = 60.0;
  long node_limit = 10'000'000;
  double integer_tolerance = 1e-6;
  double relative_gap = 1e-6;
  double absolute_gap = 1e-9;
  // Overrides Problem::warm_start when set.
  std::optional<std::vector<double>> warm_start;
};

// Best-bound branch and bound over a bounded primal simplex.
//
// Throws MalformedProblem for inconsistent input and InfeasibleWarmStart when
// a supplied incumbent violates a row, a bound or integrality. A feasible warm
// start becomes the initial incumbent and guides the first dive, so the
// returned objective never exceeds it.
Result solve(const Problem& problem, const SolveOptions& options = {});

// Largest violation of rows, bounds and integrality by `values`.
double max_violation(const Problem& problem, std::span<const double> values,
                     bool check_integrality = true);

double evaluate(std::span<const Term> terms, std::span<const double> values);

// Write-only LP-style dump for debugging:
//
//   \ <comment>
//   Minimize
//    obj: <terms> [+ <offset>]
//   Subject To
//    <row>: <terms> <= | = | >= <rhs>
//   Bounds
//    <lo> <= <var> <= <up>
//   General
//    <integer vars>
//   Binary
//    <binary vars>
//   End
//
// A term prints as "+ 2.5 x" or "- 1 y"; infinite bounds print as -inf/+inf.
void write_lp(std::ostream& out, const Problem& problem);

}  // namespace gaploc::milp

#endif  // GAPLOC_MILP_HPP_
