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

#ifndef GAPLOC_SRC_MILP_SIMPLEX_HPP_
#define GAPLOC_SRC_MILP_SIMPLEX_HPP_

#include <span>
#include <vector>

#include "gaploc/milp.hpp"

namespace gaploc::milp::detail {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

enum class VarStatus : signed char { kBasic, kAtLower, kAtUpper, kFree };

struct Basis {
  std::vector<int> head;              // basic variable per basis position
  std::vector<VarStatus> status;      // one per structural and slack column
  bool operator==(const Basis&) const = default;
};

// Revised primal simplex for bounded variables over the row form
//   A x + s = rhs,  lower <= x <= upper,
// where each row's logical s carries the bounds implied by its sense.
// Keeps an explicit dense basis inverse; refactors periodically.
// Dantzig pricing with a Bland fallback once 10 * rows consecutive
// degenerate pivots are seen.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const Problem& problem);

  int num_structural() const { return n_; }
  int num_rows() const { return m_; }

  // Replace the structural bounds; nonbasic variables are moved onto a bound.
  void set_bounds(std::span<const double> lower, std::span<const double> upper);

  // Install a basis. Falls back to the slack basis when the given one is
  // singular.
  void set_basis(const Basis& basis);
  Basis basis() const;

  LpStatus solve(long max_iterations);

  double objective() const;
  std::span<const double> values() const { return {x_.data(), static_cast<size_t>(n_)}; }
  long iterations() const { return iterations_; }

 private:
  void SlackBasis();
  bool Refactor();
  void PlaceNonbasic(int j);
  void ComputeBasicValues();
  bool IsInfeasible(int r) const;
  int Price(const std::vector<double>& cost, bool bland, int* direction);
  void ColumnInBasis(int j, std::vector<double>& out) const;
  void Pivot(int r, int q, const std::vector<double>& alpha);
  LpStatus Run(bool phase_one, long max_iterations);

  int n_ = 0;
  int m_ = 0;
  // Structural columns in compressed sparse column form.
  std::vector<int> col_start_;
  std::vector<int> row_index_;
  std::vector<double> coef_;
  std::vector<double> rhs_;
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> x_;
  std::vector<int> head_;
  std::vector<int> position_;  // basis position, or -1
  std::vector<VarStatus> status_;
  std::vector<double> binv_;   // m x m, row major
  long iterations_ = 0;
  int pivots_since_refactor_ = 0;
};

}  // namespace gaploc::milp::detail

#endif  // GAPLOC_SRC_MILP_SIMPLEX_HPP_
