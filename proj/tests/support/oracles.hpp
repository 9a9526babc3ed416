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

// Reference computations used by the tests. None of them call into the
// library's algorithms; they share only the scenario and model data types.

#ifndef GAPLOC_TESTS_SUPPORT_ORACLES_HPP_
#define GAPLOC_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaploc/model.hpp"
#include "gaploc/scenario.hpp"

namespace gaploc::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(GAPLOC_DATA_DIR) + "/" + name;
}

// Stored waste over the collection period at (h, i), summed over generators
// assigned to i, compared directly with the installed capacity.
//   x[p] in {0,1}: generator p assigned to site i
//   f[y] in {0,1}: pattern y chosen for (h, i)
//   t[j]: bins of type j for (h, i)
inline bool NonlinearCapacityHolds(const Scenario& s, std::size_t h, const std::vector<int>& x,
                                   const std::vector<int>& f, const std::vector<int>& t) {
  double lhs = 0.0;
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      lhs += s.rate(p, h) * x[p] * f[y] * s.frequencies()[y].period_days;
    }
  }
  double rhs = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) rhs += s.bins()[j].capacity * t[j];
  return lhs <= rhs + 1e-9;
}

// Whether the model's capacity and u rows for (h, i) admit some u in [0, 1]
// once x, f and t are fixed. Each u enters the capacity row with a
// non-negative coefficient, so the smallest u allowed by its own rows is a
// witness whenever one exists.
inline bool LinearCapacitySatisfiable(const Scenario& s, const LinearModel& m, std::size_t h,
                                      std::size_t i, const std::vector<int>& x,
                                      const std::vector<int>& f, const std::vector<int>& t) {
  std::vector<double> v(m.problem.num_cols(), 0.0);
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (int c = m.x_col(p, i); c != LinearModel::kOmitted) v[c] = x[p];
  }
  for (std::size_t y = 0; y < f.size(); ++y) v[m.f_col(h, i, y)] = f[y];
  for (std::size_t j = 0; j < t.size(); ++j) v[m.t_col(j, h, i)] = t[j];

  std::vector<char> is_u(m.problem.num_cols(), 0);
  std::vector<int> u_cols;
  for (std::size_t p = 0; p < s.num_generators(); ++p) {
    for (std::size_t y = 0; y < s.num_frequencies(); ++y) {
      const int c = m.u_col(p, h, i, y);
      is_u[c] = 1;
      u_cols.push_back(c);
    }
  }
  // Lower and upper limits on each u from the single-u rows.
  std::vector<double> lo(m.problem.num_cols(), 0.0);
  std::vector<double> up(m.problem.num_cols(), 1.0);
  std::vector<const milp::Row*> coupling;
  for (const auto& row : m.problem.rows) {
    int u = -1;
    int count = 0;
    double a = 0.0;
    double rest = 0.0;
    for (const auto& term : row.terms) {
      if (is_u[term.col]) {
        u = term.col;
        a = term.coef;
        ++count;
      } else {
        rest += term.coef * v[term.col];
      }
    }
    if (count == 0) continue;
    if (count > 1) {
      coupling.push_back(&row);
      continue;
    }
    const double bound = (row.rhs - rest) / a;
    const bool upper = (row.sense == milp::Sense::kLessEqual) == (a > 0);
    if (row.sense == milp::Sense::kEqual) {
      lo[u] = std::max(lo[u], bound);
      up[u] = std::min(up[u], bound);
    } else if (upper) {
      up[u] = std::min(up[u], bound);
    } else {
      lo[u] = std::max(lo[u], bound);
    }
  }
  for (int c : u_cols) {
    if (lo[c] > up[c] + 1e-9) return false;
    v[c] = lo[c];
  }
  for (const auto* row : coupling) {
    for (const auto& term : row->terms) {
      if (is_u[term.col] && (term.coef < 0.0 || row->sense != milp::Sense::kLessEqual)) {
        throw std::logic_error("u enters '" + row->name + "' in a way the witness cannot cover");
      }
    }
    double lhs = 0.0;
    for (const auto& term : row->terms) lhs += term.coef * v[term.col];
    if (row->sense == milp::Sense::kLessEqual && lhs > row->rhs + 1e-9) return false;
    if (row->sense == milp::Sense::kGreaterEqual && lhs < row->rhs - 1e-9) return false;
    if (row->sense == milp::Sense::kEqual && std::abs(lhs - row->rhs) > 1e-9) return false;
  }
  return true;
}

// Fixed point of PR = (1 - d) + d M^T PR by Gaussian elimination with
// partial pivoting, M the row-normalized weight matrix.
inline std::vector<double> PageRankFixedPoint(const Matrix& w, double d) {
  const std::size_t n = w.size();
  Matrix a(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t v = 0; v < n; ++v) {
    a[v][v] = 1.0;
    a[v][n] = 1.0 - d;
  }
  for (std::size_t u = 0; u < n; ++u) {
    double out = 0.0;
    for (double x : w[u]) out += x;
    if (out <= 0.0) continue;
    for (std::size_t v = 0; v < n; ++v) a[v][u] -= d * w[u][v] / out;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double k = a[r][c] / a[c][c];
      for (std::size_t q = c; q <= n; ++q) a[r][q] -= k * a[c][q];
    }
  }
  std::vector<double> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = a[v][n] / a[v][v];
  return out;
}

// Plain power iteration of the same map, started from d, for a fixed number
// of sweeps.
inline std::vector<double> PageRankPower(const Matrix& w, double d, int sweeps) {
  const std::size_t n = w.size();
  std::vector<double> r(n, d);
  std::vector<double> out(n);
  for (int it = 0; it < sweeps; ++it) {
    for (std::size_t v = 0; v < n; ++v) {
      double acc = 0.0;
      for (std::size_t u = 0; u < n; ++u) {
        double total = 0.0;
        for (double x : w[u]) total += x;
        if (total > 0.0) acc += w[u][v] * r[u] / total;
      }
      out[v] = (1.0 - d) + d * acc;
    }
    r.swap(out);
  }
  return r;
}

// Non-dominated subset by pairwise comparison, duplicates kept once.
inline std::vector<ObjectiveVector> BruteFront(const std::vector<ObjectiveVector>& pts,
                                               double tol = 1e-9) {
  auto dominates = [tol](const ObjectiveVector& a, const ObjectiveVector& b) {
    bool strict = false;
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      if (a[k] > b[k] + tol) return false;
      if (a[k] < b[k] - tol) strict = true;
    }
    return strict;
  };
  auto same = [tol](const ObjectiveVector& a, const ObjectiveVector& b) {
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      if (std::abs(a[k] - b[k]) > tol) return false;
    }
    return true;
  };
  std::vector<ObjectiveVector> out;
  for (const auto& p : pts) {
    bool keep = true;
    for (const auto& q : pts) keep = keep && !dominates(q, p);
    for (const auto& q : out) keep = keep && !same(p, q);
    if (keep) out.push_back(p);
  }
  return out;
}

inline bool SameSet(const std::vector<ObjectiveVector>& a, const std::vector<ObjectiveVector>& b,
                    double tol) {
  auto contains = [tol](const std::vector<ObjectiveVector>& set, const ObjectiveVector& v) {
    for (const auto& w : set) {
      bool eq = true;
      for (std::size_t k = 0; k < kNumObjectives; ++k) eq = eq && std::abs(v[k] - w[k]) <= tol;
      if (eq) return true;
    }
    return false;
  };
  for (const auto& v : a) {
    if (!contains(b, v)) return false;
  }
  for (const auto& v : b) {
    if (!contains(a, v)) return false;
  }
  return true;
}

}  // namespace gaploc::testing

#endif  // GAPLOC_TESTS_SUPPORT_ORACLES_HPP_
