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

#include "simplex.hpp"

#include <algorithm>
#include <cmath>

namespace gaploc::milp::detail {

namespace {

constexpr double kFeasibilityTol = 1e-9;
constexpr double kOptimalityTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kSingularTol = 1e-11;
constexpr int kRefactorInterval = 100;

}  // namespace

BoundedSimplex::BoundedSimplex(const Problem& problem)
    : n_(problem.num_cols()), m_(problem.num_rows()) {
  const int total = n_ + m_;
  // Merge duplicate (row, col) entries while building columns.
  std::vector<std::vector<std::pair<int, double>>> cols(static_cast<size_t>(n_));
  for (int r = 0; r < m_; ++r) {
    for (const Term& t : problem.rows[static_cast<size_t>(r)].terms) {
      auto& col = cols[static_cast<size_t>(t.col)];
      if (!col.empty() && col.back().first == r) {
        col.back().second += t.coef;
      } else {
        col.emplace_back(r, t.coef);
      }
    }
  }
  col_start_.assign(static_cast<size_t>(n_) + 1, 0);
  for (int j = 0; j < n_; ++j) {
    for (const auto& [r, v] : cols[static_cast<size_t>(j)]) {
      if (v == 0.0) continue;
      row_index_.push_back(r);
      coef_.push_back(v);
    }
    col_start_[static_cast<size_t>(j) + 1] = static_cast<int>(row_index_.size());
  }

  rhs_.resize(static_cast<size_t>(m_));
  cost_.assign(static_cast<size_t>(total), 0.0);
  lower_.assign(static_cast<size_t>(total), 0.0);
  upper_.assign(static_cast<size_t>(total), 0.0);
  for (int j = 0; j < n_; ++j) {
    lower_[static_cast<size_t>(j)] = problem.variables[static_cast<size_t>(j)].lower;
    upper_[static_cast<size_t>(j)] = problem.variables[static_cast<size_t>(j)].upper;
  }
  for (const Term& t : problem.objective) cost_[static_cast<size_t>(t.col)] += t.coef;
  for (int r = 0; r < m_; ++r) {
    const Row& row = problem.rows[static_cast<size_t>(r)];
    rhs_[static_cast<size_t>(r)] = row.rhs;
    const size_t s = static_cast<size_t>(n_ + r);
    switch (row.sense) {
      case Sense::kLessEqual:
        lower_[s] = 0.0;
        upper_[s] = kInfinity;
        break;
      case Sense::kGreaterEqual:
        lower_[s] = -kInfinity;
        upper_[s] = 0.0;
        break;
      case Sense::kEqual:
        lower_[s] = 0.0;
        upper_[s] = 0.0;
        break;
    }
  }
  x_.assign(static_cast<size_t>(total), 0.0);
  status_.assign(static_cast<size_t>(total), VarStatus::kAtLower);
  SlackBasis();
}

void BoundedSimplex::SlackBasis() {
  const int total = n_ + m_;
  head_.resize(static_cast<size_t>(m_));
  position_.assign(static_cast<size_t>(total), -1);
  for (int r = 0; r < m_; ++r) {
    head_[static_cast<size_t>(r)] = n_ + r;
    position_[static_cast<size_t>(n_ + r)] = r;
    status_[static_cast<size_t>(n_ + r)] = VarStatus::kBasic;
  }
  for (int j = 0; j < n_; ++j) {
    status_[static_cast<size_t>(j)] = VarStatus::kAtLower;
    PlaceNonbasic(j);
  }
  binv_.assign(static_cast<size_t>(m_) * static_cast<size_t>(m_), 0.0);
  for (int r = 0; r < m_; ++r) binv_[static_cast<size_t>(r) * static_cast<size_t>(m_ + 1)] = 1.0;
  pivots_since_refactor_ = 0;
  ComputeBasicValues();
}

void BoundedSimplex::PlaceNonbasic(int j) {
  const size_t k = static_cast<size_t>(j);
  const bool lower_finite = std::isfinite(lower_[k]);
  const bool upper_finite = std::isfinite(upper_[k]);
  if (status_[k] == VarStatus::kAtUpper && upper_finite) {
    x_[k] = upper_[k];
  } else if (lower_finite) {
    status_[k] = VarStatus::kAtLower;
    x_[k] = lower_[k];
  } else if (upper_finite) {
    status_[k] = VarStatus::kAtUpper;
    x_[k] = upper_[k];
  } else {
    status_[k] = VarStatus::kFree;
    x_[k] = 0.0;
  }
}

void BoundedSimplex::set_bounds(std::span<const double> lower, std::span<const double> upper) {
  for (int j = 0; j < n_; ++j) {
    lower_[static_cast<size_t>(j)] = lower[static_cast<size_t>(j)];
    upper_[static_cast<size_t>(j)] = upper[static_cast<size_t>(j)];
    if (status_[static_cast<size_t>(j)] != VarStatus::kBasic) PlaceNonbasic(j);
  }
  ComputeBasicValues();
}

Basis BoundedSimplex::basis() const { return Basis{head_, status_}; }

void BoundedSimplex::set_basis(const Basis& basis) {
  if (basis.head.size() != static_cast<size_t>(m_) ||
      basis.status.size() != status_.size()) {
    SlackBasis();
    return;
  }
  const bool same_head = basis.head == head_;
  status_ = basis.status;
  if (!same_head) {
    head_ = basis.head;
    std::fill(position_.begin(), position_.end(), -1);
    for (int r = 0; r < m_; ++r) position_[static_cast<size_t>(head_[static_cast<size_t>(r)])] = r;
  }
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[static_cast<size_t>(j)] != VarStatus::kBasic) PlaceNonbasic(j);
  }
  if (!same_head && !Refactor()) {
    SlackBasis();
    return;
  }
  ComputeBasicValues();
}

bool BoundedSimplex::Refactor() {
  // With basic slacks on rows R_S and structurals T on the remaining rows
  // R_T, the basis is [[I, A_ST], [0, A_TT]] up to permutation, so only the
  // |T| x |T| block needs a dense inverse.
  const size_t m = static_cast<size_t>(m_);
  std::vector<int> slack_row_basic(m, -1);
  std::vector<size_t> structural_pos;
  for (size_t r = 0; r < m; ++r) {
    const int j = head_[r];
    if (j >= n_) {
      slack_row_basic[static_cast<size_t>(j - n_)] = static_cast<int>(r);
    } else {
      structural_pos.push_back(r);
    }
  }
  std::vector<size_t> rows_t;
  std::vector<int> row_slot(m, -1);
  for (size_t k = 0; k < m; ++k) {
    if (slack_row_basic[k] < 0) {
      row_slot[k] = static_cast<int>(rows_t.size());
      rows_t.push_back(k);
    }
  }
  const size_t t = structural_pos.size();
  if (rows_t.size() != t) return false;

  std::vector<double> mat(t * t, 0.0);
  for (size_t a = 0; a < t; ++a) {
    const size_t j = static_cast<size_t>(head_[structural_pos[a]]);
    for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
      const int slot = row_slot[static_cast<size_t>(row_index_[static_cast<size_t>(e)])];
      if (slot >= 0) mat[static_cast<size_t>(slot) * t + a] = coef_[static_cast<size_t>(e)];
    }
  }
  std::vector<double> inv(t * t, 0.0);
  for (size_t r = 0; r < t; ++r) inv[r * t + r] = 1.0;

  // Gauss-Jordan with partial pivoting on [A_TT | I].
  for (size_t c = 0; c < t; ++c) {
    size_t pivot = c;
    double best = std::abs(mat[c * t + c]);
    for (size_t r = c + 1; r < t; ++r) {
      const double v = std::abs(mat[r * t + c]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < kSingularTol) return false;
    if (pivot != c) {
      std::swap_ranges(mat.begin() + static_cast<long>(c * t),
                       mat.begin() + static_cast<long>((c + 1) * t),
                       mat.begin() + static_cast<long>(pivot * t));
      std::swap_ranges(inv.begin() + static_cast<long>(c * t),
                       inv.begin() + static_cast<long>((c + 1) * t),
                       inv.begin() + static_cast<long>(pivot * t));
    }
    const double scale = 1.0 / mat[c * t + c];
    for (size_t k = c; k < t; ++k) mat[c * t + k] *= scale;
    for (size_t k = 0; k < t; ++k) inv[c * t + k] *= scale;
    for (size_t r = 0; r < t; ++r) {
      if (r == c) continue;
      const double f = mat[r * t + c];
      if (f == 0.0) continue;
      for (size_t k = c; k < t; ++k) mat[r * t + k] -= f * mat[c * t + k];
      for (size_t k = 0; k < t; ++k) inv[r * t + k] -= f * inv[c * t + k];
    }
  }

  binv_.assign(m * m, 0.0);
  for (size_t a = 0; a < t; ++a) {
    double* row = &binv_[structural_pos[a] * m];
    for (size_t b = 0; b < t; ++b) row[rows_t[b]] = inv[a * t + b];
  }
  for (size_t k = 0; k < m; ++k) {
    if (slack_row_basic[k] >= 0) binv_[static_cast<size_t>(slack_row_basic[k]) * m + k] = 1.0;
  }
  // Slack rows: e_k - A[k, T] * inv(A_TT), accumulated column by column.
  for (size_t a = 0; a < t; ++a) {
    const size_t j = static_cast<size_t>(head_[structural_pos[a]]);
    const double* inv_row = &inv[a * t];
    for (int e = col_start_[j]; e < col_start_[j + 1]; ++e) {
      const size_t k = static_cast<size_t>(row_index_[static_cast<size_t>(e)]);
      if (slack_row_basic[k] < 0) continue;
      const double v = coef_[static_cast<size_t>(e)];
      double* row = &binv_[static_cast<size_t>(slack_row_basic[k]) * m];
      for (size_t b = 0; b < t; ++b) row[rows_t[b]] -= v * inv_row[b];
    }
  }
  pivots_since_refactor_ = 0;
  return true;
}

void BoundedSimplex::ComputeBasicValues() {
  const size_t m = static_cast<size_t>(m_);
  std::vector<double> v(rhs_);
  for (int j = 0; j < n_ + m_; ++j) {
    const size_t k = static_cast<size_t>(j);
    if (status_[k] == VarStatus::kBasic || x_[k] == 0.0) continue;
    if (j >= n_) {
      v[static_cast<size_t>(j - n_)] -= x_[k];
    } else {
      for (int t = col_start_[k]; t < col_start_[k + 1]; ++t) {
        v[static_cast<size_t>(row_index_[static_cast<size_t>(t)])] -=
            coef_[static_cast<size_t>(t)] * x_[k];
      }
    }
  }
  for (size_t r = 0; r < m; ++r) {
    double s = 0.0;
    const double* row = &binv_[r * m];
    for (size_t k = 0; k < m; ++k) s += row[k] * v[k];
    x_[static_cast<size_t>(head_[r])] = s;
  }
}

bool BoundedSimplex::IsInfeasible(int r) const {
  const size_t j = static_cast<size_t>(head_[static_cast<size_t>(r)]);
  return x_[j] < lower_[j] - kFeasibilityTol || x_[j] > upper_[j] + kFeasibilityTol;
}

void BoundedSimplex::ColumnInBasis(int j, std::vector<double>& out) const {
  const size_t m = static_cast<size_t>(m_);
  out.assign(m, 0.0);
  if (j >= n_) {
    const size_t c = static_cast<size_t>(j - n_);
    for (size_t r = 0; r < m; ++r) out[r] = binv_[r * m + c];
    return;
  }
  for (int t = col_start_[static_cast<size_t>(j)]; t < col_start_[static_cast<size_t>(j) + 1];
       ++t) {
    const size_t c = static_cast<size_t>(row_index_[static_cast<size_t>(t)]);
    const double v = coef_[static_cast<size_t>(t)];
    for (size_t r = 0; r < m; ++r) out[r] += binv_[r * m + c] * v;
  }
}

int BoundedSimplex::Price(const std::vector<double>& cost, bool bland, int* direction) {
  const size_t m = static_cast<size_t>(m_);
  std::vector<double> y(m, 0.0);
  for (size_t r = 0; r < m; ++r) {
    const double c = cost[static_cast<size_t>(head_[r])];
    if (c == 0.0) continue;
    const double* row = &binv_[r * m];
    for (size_t k = 0; k < m; ++k) y[k] += c * row[k];
  }
  int entering = -1;
  double best = 0.0;
  for (int j = 0; j < n_ + m_; ++j) {
    const size_t k = static_cast<size_t>(j);
    const VarStatus st = status_[k];
    if (st == VarStatus::kBasic || lower_[k] == upper_[k]) continue;
    double d = cost[k];
    if (j >= n_) {
      d -= y[static_cast<size_t>(j - n_)];
    } else {
      for (int t = col_start_[k]; t < col_start_[k + 1]; ++t) {
        d -= y[static_cast<size_t>(row_index_[static_cast<size_t>(t)])] *
             coef_[static_cast<size_t>(t)];
      }
    }
    int dir = 0;
    if ((st == VarStatus::kAtLower || st == VarStatus::kFree) && d < -kOptimalityTol) {
      dir = 1;
    } else if ((st == VarStatus::kAtUpper || st == VarStatus::kFree) && d > kOptimalityTol) {
      dir = -1;
    }
    if (dir == 0) continue;
    if (bland) {
      *direction = dir;
      return j;
    }
    if (std::abs(d) > best) {
      best = std::abs(d);
      entering = j;
      *direction = dir;
    }
  }
  return entering;
}

void BoundedSimplex::Pivot(int r, int q, const std::vector<double>& alpha) {
  const size_t m = static_cast<size_t>(m_);
  const size_t pr = static_cast<size_t>(r);
  double* prow = &binv_[pr * m];
  const double inv_pivot = 1.0 / alpha[pr];
  for (size_t k = 0; k < m; ++k) prow[k] *= inv_pivot;
  for (size_t i = 0; i < m; ++i) {
    if (i == pr) continue;
    const double f = alpha[i];
    if (f == 0.0) continue;
    double* row = &binv_[i * m];
    for (size_t k = 0; k < m; ++k) row[k] -= f * prow[k];
  }
  const int leaving = head_[pr];
  position_[static_cast<size_t>(leaving)] = -1;
  head_[pr] = q;
  position_[static_cast<size_t>(q)] = r;
  status_[static_cast<size_t>(q)] = VarStatus::kBasic;
  ++pivots_since_refactor_;
}

LpStatus BoundedSimplex::Run(bool phase_one, long max_iterations) {
  const size_t total = static_cast<size_t>(n_ + m_);
  std::vector<double> cost(total, 0.0);
  std::vector<double> alpha;
  long degenerate_run = 0;
  bool retried = false;

  while (true) {
    if (phase_one) {
      std::fill(cost.begin(), cost.end(), 0.0);
      bool any = false;
      for (int r = 0; r < m_; ++r) {
        const size_t j = static_cast<size_t>(head_[static_cast<size_t>(r)]);
        if (x_[j] < lower_[j] - kFeasibilityTol) {
          cost[j] = -1.0;
          any = true;
        } else if (x_[j] > upper_[j] + kFeasibilityTol) {
          cost[j] = 1.0;
          any = true;
        }
      }
      if (!any) return LpStatus::kOptimal;
    } else {
      cost = cost_;
    }
    if (iterations_ >= max_iterations) return LpStatus::kIterationLimit;

    const bool bland = degenerate_run > 10L * m_;
    int dir = 0;
    const int q = Price(cost, bland, &dir);
    if (q < 0) return phase_one ? LpStatus::kInfeasible : LpStatus::kOptimal;

    ColumnInBasis(q, alpha);
    double theta = kInfinity;
    int leave = -1;
    bool leave_to_upper = false;
    for (int r = 0; r < m_; ++r) {
      const double a = alpha[static_cast<size_t>(r)];
      if (std::abs(a) < kPivotTol) continue;
      const double rate = -dir * a;
      const size_t j = static_cast<size_t>(head_[static_cast<size_t>(r)]);
      const double xv = x_[j];
      double limit = kInfinity;
      bool to_upper = false;
      if (phase_one && xv < lower_[j] - kFeasibilityTol) {
        if (rate > 0) limit = (lower_[j] - xv) / rate;
      } else if (phase_one && xv > upper_[j] + kFeasibilityTol) {
        if (rate < 0) {
          limit = (xv - upper_[j]) / -rate;
          to_upper = true;
        }
      } else if (rate < 0) {
        if (std::isfinite(lower_[j])) limit = (xv - lower_[j]) / -rate;
      } else if (std::isfinite(upper_[j])) {
        limit = (upper_[j] - xv) / rate;
        to_upper = true;
      }
      if (!std::isfinite(limit)) continue;
      limit = std::max(limit, 0.0);
      bool take = false;
      if (leave < 0 || limit < theta - 1e-12) {
        take = true;
      } else if (limit <= theta + 1e-12) {
        const size_t cur = static_cast<size_t>(leave);
        take = bland ? head_[static_cast<size_t>(r)] < head_[cur]
                     : std::abs(a) > std::abs(alpha[cur]);
      }
      if (take) {
        theta = std::min(theta, limit);
        leave = r;
        leave_to_upper = to_upper;
      }
    }

    const size_t qk = static_cast<size_t>(q);
    const double flip = upper_[qk] - lower_[qk];
    const bool do_flip = std::isfinite(flip) && flip <= theta;
    if (do_flip) theta = flip;

    if (!std::isfinite(theta)) {
      if (!phase_one) return LpStatus::kUnbounded;
      // Cannot happen in exact arithmetic; refresh the factorization once.
      if (retried || !Refactor()) return LpStatus::kIterationLimit;
      ComputeBasicValues();
      retried = true;
      continue;
    }

    for (int r = 0; r < m_; ++r) {
      const double a = alpha[static_cast<size_t>(r)];
      if (a != 0.0) x_[static_cast<size_t>(head_[static_cast<size_t>(r)])] -= dir * a * theta;
    }
    x_[qk] += dir * theta;

    if (do_flip) {
      status_[qk] = dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
      x_[qk] = dir > 0 ? upper_[qk] : lower_[qk];
    } else {
      const size_t lj = static_cast<size_t>(head_[static_cast<size_t>(leave)]);
      Pivot(leave, q, alpha);
      status_[lj] = leave_to_upper ? VarStatus::kAtUpper : VarStatus::kAtLower;
      x_[lj] = leave_to_upper ? upper_[lj] : lower_[lj];
    }

    ++iterations_;
    degenerate_run = theta <= 1e-12 ? degenerate_run + 1 : 0;
    if (pivots_since_refactor_ >= kRefactorInterval) {
      if (!Refactor()) return LpStatus::kIterationLimit;
      ComputeBasicValues();
    }
  }
}

LpStatus BoundedSimplex::solve(long max_iterations) {
  const long budget = iterations_ + max_iterations;
  LpStatus st = Run(true, budget);
  if (st != LpStatus::kOptimal) return st;
  st = Run(false, budget);
  if (st == LpStatus::kOptimal) ComputeBasicValues();
  return st;
}

double BoundedSimplex::objective() const {
  double z = 0.0;
  for (int j = 0; j < n_; ++j) z += cost_[static_cast<size_t>(j)] * x_[static_cast<size_t>(j)];
  return z;
}

}  // namespace gaploc::milp::detail
