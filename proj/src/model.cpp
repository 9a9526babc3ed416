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

#include "gaploc/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gaploc/errors.hpp"

namespace gaploc {

namespace {

constexpr double kTol = 1e-9;

void CheckShape(const Scenario& s, const Solution& sol) {
  if (sol.num_bins != s.num_bins() || sol.num_fractions != s.num_fractions() ||
      sol.num_sites != s.num_sites() ||
      sol.bin_counts.size() != s.num_bins() * s.num_fractions() * s.num_sites() ||
      sol.assignment.size() != s.num_generators() ||
      sol.frequency.size() != s.num_fractions() * s.num_sites()) {
    throw UnknownId("solution does not match the scenario's index sets");
  }
  for (std::size_t p = 0; p < sol.assignment.size(); ++p) {
    if (sol.assignment[p] && *sol.assignment[p] >= s.num_sites()) {
      throw UnknownId("generator '" + s.generators()[p].id + "' is assigned to an unknown site");
    }
  }
  for (const auto& y : sol.frequency) {
    if (y && *y >= s.num_frequencies()) throw UnknownId("solution uses an unknown frequency");
  }
}

std::string Label(const Scenario& s, std::size_t h, std::size_t i) {
  return "(" + s.fractions()[h] + ", " + s.sites()[i].id + ")";
}

}  // namespace

Solution Solution::empty(const Scenario& s) {
  Solution sol;
  sol.num_bins = s.num_bins();
  sol.num_fractions = s.num_fractions();
  sol.num_sites = s.num_sites();
  sol.bin_counts.assign(sol.num_bins * sol.num_fractions * sol.num_sites, 0);
  sol.assignment.assign(s.num_generators(), std::nullopt);
  sol.frequency.assign(sol.num_fractions * sol.num_sites, std::nullopt);
  return sol;
}

bool Solution::site_open(std::size_t i) const {
  for (std::size_t h = 0; h < num_fractions; ++h) {
    if (freq(h, i)) return true;
    for (std::size_t j = 0; j < num_bins; ++j) {
      if (bins(j, h, i) != 0) return true;
    }
  }
  return false;
}

ObjectiveVector eval_objectives(const Scenario& s, const Solution& sol) {
  CheckShape(s, sol);
  ObjectiveVector out;
  const double cells = static_cast<double>(s.num_sites() * s.num_fractions());
  for (std::size_t h = 0; h < s.num_fractions(); ++h) {
    for (std::size_t i = 0; i < s.num_sites(); ++i) {
      if (const auto& y = sol.freq(h, i)) {
        out.f1 += 1.0 / static_cast<double>(s.frequencies()[*y].period_days);
      }
    }
  }
  out.f1 /= cells;
  for (std::size_t p = 0; p < s.num_generators(); ++p) {
    if (sol.assignment[p]) out.f2 += s.distance(p, *sol.assignment[p]);
  }
  out.f2 /= static_cast<double>(s.num_generators());
  for (std::size_t j = 0; j < s.num_bins(); ++j) {
    for (std::size_t h = 0; h < s.num_fractions(); ++h) {
      for (std::size_t i = 0; i < s.num_sites(); ++i) {
        out.f3 += sol.bins(j, h, i) * s.bins()[j].cost;
      }
    }
  }
  return out;
}

std::string_view family_name(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::kAssignment:
      return "assignment";
    case ConstraintFamily::kSpace:
      return "space";
    case ConstraintFamily::kCapacity:
      return "capacity";
    case ConstraintFamily::kFrequencyRequired:
      return "frequency-required";
    case ConstraintFamily::kDistance:
      return "distance";
    case ConstraintFamily::kDomain:
      return "domain";
  }
  return "unknown";
}

std::vector<Violation> check_feasible(const Scenario& s, const Solution& sol) {
  CheckShape(s, sol);
  std::vector<Violation> out;
  const std::size_t I = s.num_sites();
  const std::size_t H = s.num_fractions();

  for (std::size_t j = 0; j < s.num_bins(); ++j) {
    for (std::size_t h = 0; h < H; ++h) {
      for (std::size_t i = 0; i < I; ++i) {
        if (sol.bins(j, h, i) < 0) {
          out.push_back({ConstraintFamily::kDomain, "negative count of bin '" + s.bins()[j].id +
                                                        "' at " + Label(s, h, i)});
        }
      }
    }
  }

  std::vector<bool> used(I, false);
  for (std::size_t p = 0; p < s.num_generators(); ++p) {
    const auto& site = sol.assignment[p];
    if (!site) {
      out.push_back({ConstraintFamily::kAssignment,
                     "generator '" + s.generators()[p].id + "' is not assigned"});
      continue;
    }
    used[*site] = true;
    if (!s.reachable(p, *site)) {
      out.push_back({ConstraintFamily::kDistance,
                     "generator '" + s.generators()[p].id + "' is " +
                         std::to_string(s.distance(p, *site)) + " m from site '" +
                         s.sites()[*site].id + "'"});
    }
  }

  for (std::size_t i = 0; i < I; ++i) {
    double footprint = 0.0;
    for (std::size_t j = 0; j < s.num_bins(); ++j) {
      for (std::size_t h = 0; h < H; ++h) footprint += sol.bins(j, h, i) * s.bins()[j].footprint;
    }
    if (footprint > s.sites()[i].available_space + kTol) {
      out.push_back({ConstraintFamily::kSpace, "site '" + s.sites()[i].id + "' needs " +
                                                   std::to_string(footprint) + " m2"});
    }
    for (std::size_t h = 0; h < H; ++h) {
      const auto& y = sol.freq(h, i);
      if (used[i] && !y) {
        out.push_back({ConstraintFamily::kFrequencyRequired,
                       "no collection frequency at " + Label(s, h, i)});
      }
      double demand = 0.0;
      if (y) {
        const double days = s.frequencies()[*y].period_days;
        for (std::size_t p = 0; p < s.num_generators(); ++p) {
          if (sol.assignment[p] == i) demand += s.rate(p, h) * days;
        }
      }
      double capacity = 0.0;
      for (std::size_t j = 0; j < s.num_bins(); ++j) {
        capacity += s.bins()[j].capacity * sol.bins(j, h, i);
      }
      if (demand > capacity + kTol * std::max(1.0, capacity)) {
        out.push_back({ConstraintFamily::kCapacity, "stored volume " + std::to_string(demand) +
                                                        " m3 exceeds capacity " +
                                                        std::to_string(capacity) + " m3 at " +
                                                        Label(s, h, i)});
      }
    }
  }
  return out;
}

std::size_t LinearModel::count_x() const {
  return static_cast<std::size_t>(
      std::count_if(x_cols_.begin(), x_cols_.end(), [](int c) { return c != kOmitted; }));
}

std::vector<double> LinearModel::encode(const Solution& sol) const {
  std::vector<double> v(static_cast<std::size_t>(problem.num_cols()), 0.0);
  auto x_val = [&](std::size_t p, std::size_t i) {
    return sol.assignment[p] == i ? 1.0 : 0.0;
  };
  auto f_val = [&](std::size_t h, std::size_t i, std::size_t y) {
    return sol.freq(h, i) == y ? 1.0 : 0.0;
  };
  for (std::size_t p = 0; p < num_generators; ++p) {
    for (std::size_t i = 0; i < num_sites; ++i) {
      if (int c = x_col(p, i); c != kOmitted) v[static_cast<std::size_t>(c)] = x_val(p, i);
    }
  }
  for (std::size_t h = 0; h < num_fractions; ++h) {
    for (std::size_t i = 0; i < num_sites; ++i) {
      for (std::size_t y = 0; y < num_frequencies; ++y) {
        v[static_cast<std::size_t>(f_col(h, i, y))] = f_val(h, i, y);
      }
    }
  }
  for (std::size_t j = 0; j < num_bins; ++j) {
    for (std::size_t h = 0; h < num_fractions; ++h) {
      for (std::size_t i = 0; i < num_sites; ++i) {
        v[static_cast<std::size_t>(t_col(j, h, i))] = sol.bins(j, h, i);
      }
    }
  }
  for (std::size_t p = 0; p < num_generators; ++p) {
    for (std::size_t h = 0; h < num_fractions; ++h) {
      for (std::size_t i = 0; i < num_sites; ++i) {
        for (std::size_t y = 0; y < num_frequencies; ++y) {
          v[static_cast<std::size_t>(u_col(p, h, i, y))] =
              std::max(0.0, 1.0 - x_val(p, i) - f_val(h, i, y));
        }
      }
    }
  }
  return v;
}

Solution LinearModel::decode(std::span<const double> values) const {
  Solution sol;
  sol.num_bins = num_bins;
  sol.num_fractions = num_fractions;
  sol.num_sites = num_sites;
  sol.bin_counts.assign(num_bins * num_fractions * num_sites, 0);
  sol.assignment.assign(num_generators, std::nullopt);
  sol.frequency.assign(num_fractions * num_sites, std::nullopt);
  auto on = [&](int c) { return c != kOmitted && values[static_cast<std::size_t>(c)] > 0.5; };
  for (std::size_t p = 0; p < num_generators; ++p) {
    for (std::size_t i = 0; i < num_sites && !sol.assignment[p]; ++i) {
      if (on(x_col(p, i))) sol.assignment[p] = i;
    }
  }
  for (std::size_t h = 0; h < num_fractions; ++h) {
    for (std::size_t i = 0; i < num_sites; ++i) {
      for (std::size_t y = 0; y < num_frequencies && !sol.freq(h, i); ++y) {
        if (on(f_col(h, i, y))) sol.freq(h, i) = y;
      }
    }
  }
  for (std::size_t j = 0; j < num_bins; ++j) {
    for (std::size_t h = 0; h < num_fractions; ++h) {
      for (std::size_t i = 0; i < num_sites; ++i) {
        sol.bins(j, h, i) =
            static_cast<int>(std::lround(values[static_cast<std::size_t>(t_col(j, h, i))]));
      }
    }
  }
  return sol;
}

milp::Problem LinearModel::minimize(std::size_t k) const {
  milp::Problem p = problem;
  p.objective = objectives[k];
  return p;
}

LinearModel build_linear_model(const Scenario& s) {
  using milp::Sense;
  using milp::Term;
  using milp::VarKind;

  LinearModel m;
  m.num_sites = s.num_sites();
  m.num_generators = s.num_generators();
  m.num_fractions = s.num_fractions();
  m.num_frequencies = s.num_frequencies();
  m.num_bins = s.num_bins();
  const std::size_t P = m.num_generators, I = m.num_sites, H = m.num_fractions,
                    Y = m.num_frequencies, J = m.num_bins;
  milp::Problem& prob = m.problem;

  const auto& sites = s.sites();
  const auto& gens = s.generators();
  const auto& bins = s.bins();
  const auto& freqs = s.frequencies();
  const auto& fracs = s.fractions();

  m.x_cols_.assign(P * I, LinearModel::kOmitted);
  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t i = 0; i < I; ++i) {
      if (!s.reachable(p, i)) continue;
      m.x_cols_[p * I + i] =
          prob.add_variable("x[" + gens[p].id + "," + sites[i].id + "]", VarKind::kBinary, 0, 1);
    }
  }
  m.f_cols_.resize(H * I * Y);
  for (std::size_t h = 0; h < H; ++h) {
    for (std::size_t i = 0; i < I; ++i) {
      for (std::size_t y = 0; y < Y; ++y) {
        m.f_cols_[(h * I + i) * Y + y] = prob.add_variable(
            "f[" + fracs[h] + "," + sites[i].id + "," + freqs[y].id + "]", VarKind::kBinary, 0, 1);
      }
    }
  }
  m.t_cols_.resize(J * H * I);
  for (std::size_t j = 0; j < J; ++j) {
    for (std::size_t h = 0; h < H; ++h) {
      for (std::size_t i = 0; i < I; ++i) {
        const double max_count =
            std::floor(sites[i].available_space / bins[j].footprint + kTol);
        m.t_cols_[(j * H + h) * I + i] = prob.add_variable(
            "t[" + bins[j].id + "," + fracs[h] + "," + sites[i].id + "]", VarKind::kInteger, 0,
            max_count);
      }
    }
  }
  m.u_cols_.resize(P * H * I * Y);
  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t h = 0; h < H; ++h) {
      for (std::size_t i = 0; i < I; ++i) {
        for (std::size_t y = 0; y < Y; ++y) {
          m.u_cols_[((p * H + h) * I + i) * Y + y] = prob.add_variable(
              "u[" + gens[p].id + "," + fracs[h] + "," + sites[i].id + "," + freqs[y].id + "]",
              VarKind::kContinuous, 0, 1);
        }
      }
    }
  }

  // Each generator served by exactly one reachable site.
  for (std::size_t p = 0; p < P; ++p) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < I; ++i) {
      if (int c = m.x_col(p, i); c != LinearModel::kOmitted) terms.push_back({c, 1.0});
    }
    prob.add_row("assign[" + gens[p].id + "]", std::move(terms), Sense::kEqual, 1.0);
  }
  // Footprint.
  for (std::size_t i = 0; i < I; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < J; ++j) {
      for (std::size_t h = 0; h < H; ++h) terms.push_back({m.t_col(j, h, i), bins[j].footprint});
    }
    prob.add_row("space[" + sites[i].id + "]", std::move(terms), Sense::kLessEqual,
                 sites[i].available_space);
  }
  // At most one frequency; a frequency whenever a generator is served.
  for (std::size_t h = 0; h < H; ++h) {
    for (std::size_t i = 0; i < I; ++i) {
      std::vector<Term> terms;
      for (std::size_t y = 0; y < Y; ++y) terms.push_back({m.f_col(h, i, y), 1.0});
      prob.add_row("one_freq[" + fracs[h] + "," + sites[i].id + "]", std::move(terms),
                   Sense::kLessEqual, 1.0);
    }
  }
  for (std::size_t h = 0; h < H; ++h) {
    for (std::size_t i = 0; i < I; ++i) {
      std::vector<Term> terms;
      for (std::size_t y = 0; y < Y; ++y) {
        terms.push_back({m.f_col(h, i, y), static_cast<double>(P)});
      }
      for (std::size_t p = 0; p < P; ++p) {
        if (int c = m.x_col(p, i); c != LinearModel::kOmitted) terms.push_back({c, -1.0});
      }
      prob.add_row("open[" + fracs[h] + "," + sites[i].id + "]", std::move(terms),
                   Sense::kGreaterEqual, 0.0);
    }
  }
  // Linearized capacity: sum_{p,y} b a (u + f - 1 + x) <= sum_j cap t.
  for (std::size_t h = 0; h < H; ++h) {
    for (std::size_t i = 0; i < I; ++i) {
      std::vector<Term> terms;
      double rhs = 0.0;
      for (std::size_t y = 0; y < Y; ++y) {
        const double a = freqs[y].period_days;
        double f_coef = 0.0;
        for (std::size_t p = 0; p < P; ++p) {
          const double ba = s.rate(p, h) * a;
          if (ba == 0.0) continue;
          terms.push_back({m.u_col(p, h, i, y), ba});
          f_coef += ba;
          rhs += ba;
        }
        if (f_coef != 0.0) terms.push_back({m.f_col(h, i, y), f_coef});
      }
      for (std::size_t p = 0; p < P; ++p) {
        const int c = m.x_col(p, i);
        if (c == LinearModel::kOmitted || s.rate(p, h) == 0.0) continue;
        double a_sum = 0.0;
        for (const auto& f : freqs) a_sum += f.period_days;
        terms.push_back({c, s.rate(p, h) * a_sum});
      }
      for (std::size_t j = 0; j < J; ++j) terms.push_back({m.t_col(j, h, i), -bins[j].capacity});
      prob.add_row("capacity[" + fracs[h] + "," + sites[i].id + "]", std::move(terms),
                   Sense::kLessEqual, rhs);
    }
  }
  // u pinned by x and f.
  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t h = 0; h < H; ++h) {
      for (std::size_t i = 0; i < I; ++i) {
        for (std::size_t y = 0; y < Y; ++y) {
          const std::string idx =
              "[" + gens[p].id + "," + fracs[h] + "," + sites[i].id + "," + freqs[y].id + "]";
          const int u = m.u_col(p, h, i, y);
          const int f = m.f_col(h, i, y);
          const int x = m.x_col(p, i);
          std::vector<Term> low_terms{{u, 1.0}, {f, 1.0}};
          std::vector<Term> assign_terms{{u, 1.0}};
          if (x != LinearModel::kOmitted) {
            low_terms.push_back({x, 1.0});
            assign_terms.push_back({x, 1.0});
          }
          prob.add_row("u_low" + idx, std::move(low_terms), Sense::kGreaterEqual, 1.0);
          prob.add_row("u_freq" + idx, {{u, 1.0}, {f, 1.0}}, Sense::kLessEqual, 1.0);
          prob.add_row("u_assign" + idx, std::move(assign_terms), Sense::kLessEqual, 1.0);
        }
      }
    }
  }

  const double cells = static_cast<double>(I * H);
  for (std::size_t h = 0; h < H; ++h) {
    for (std::size_t i = 0; i < I; ++i) {
      for (std::size_t y = 0; y < Y; ++y) {
        m.objectives[0].push_back({m.f_col(h, i, y), 1.0 / (freqs[y].period_days * cells)});
      }
    }
  }
  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t i = 0; i < I; ++i) {
      if (int c = m.x_col(p, i); c != LinearModel::kOmitted) {
        m.objectives[1].push_back({c, s.distance(p, i) / static_cast<double>(P)});
      }
    }
  }
  for (std::size_t j = 0; j < J; ++j) {
    for (std::size_t h = 0; h < H; ++h) {
      for (std::size_t i = 0; i < I; ++i) m.objectives[2].push_back({m.t_col(j, h, i), bins[j].cost});
    }
  }
  return m;
}

std::vector<std::vector<int>> enumerate_bin_configurations(const Scenario& s, double space) {
  const std::size_t J = s.num_bins();
  std::vector<std::vector<int>> out;
  std::vector<int> counts(J, 0);
  std::function<void(std::size_t, double)> rec = [&](std::size_t j, double left) {
    if (j == J) {
      out.push_back(counts);
      return;
    }
    const double e = s.bins()[j].footprint;
    const int max_count = static_cast<int>(std::floor(left / e + kTol));
    for (int c = 0; c <= max_count; ++c) {
      counts[j] = c;
      rec(j + 1, left - c * e);
    }
    counts[j] = 0;
  };
  rec(0, space);
  return out;
}

std::optional<BinChoice> min_cost_bins(const Scenario& s, std::size_t site,
                                       std::span<const double> demand) {
  if (site >= s.num_sites()) throw UnknownId("unknown site index " + std::to_string(site));
  const std::size_t J = s.num_bins();
  const std::size_t H = s.num_fractions();
  if (demand.size() != H) throw UnknownId("demand vector does not match the fraction list");
  const double space = s.sites()[site].available_space;

  struct Option {
    std::vector<int> counts;
    double cost, footprint, capacity;
    int num_bins;
  };
  std::vector<Option> options;
  for (auto& c : enumerate_bin_configurations(s, space)) {
    Option o{c, 0, 0, 0, 0};
    for (std::size_t j = 0; j < J; ++j) {
      o.cost += c[j] * s.bins()[j].cost;
      o.footprint += c[j] * s.bins()[j].footprint;
      o.capacity += c[j] * s.bins()[j].capacity;
      o.num_bins += c[j];
    }
    options.push_back(std::move(o));
  }

  std::optional<BinChoice> best;
  auto better = [](const BinChoice& a, const BinChoice& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.footprint != b.footprint) return a.footprint < b.footprint;
    if (a.num_bins != b.num_bins) return a.num_bins < b.num_bins;
    return a.counts < b.counts;
  };
  BinChoice cur;
  cur.counts.assign(J * H, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t h) {
    if (best && cur.cost > best->cost) return;
    if (h == H) {
      if (!best || better(cur, *best)) best = cur;
      return;
    }
    for (const Option& o : options) {
      if (o.capacity + kTol * std::max(1.0, demand[h]) < demand[h]) continue;
      if (cur.footprint + o.footprint > space + kTol) continue;
      for (std::size_t j = 0; j < J; ++j) cur.counts[j * H + h] = o.counts[j];
      cur.cost += o.cost;
      cur.footprint += o.footprint;
      cur.num_bins += o.num_bins;
      rec(h + 1);
      cur.cost -= o.cost;
      cur.footprint -= o.footprint;
      cur.num_bins -= o.num_bins;
    }
    for (std::size_t j = 0; j < J; ++j) cur.counts[j * H + h] = 0;
  };
  rec(0);
  if (best) {
    // Recompute sums to avoid accumulated rounding from the search.
    best->cost = best->footprint = 0.0;
    best->num_bins = 0;
    for (std::size_t j = 0; j < J; ++j) {
      for (std::size_t h = 0; h < H; ++h) {
        const int c = best->counts[j * H + h];
        best->cost += c * s.bins()[j].cost;
        best->footprint += c * s.bins()[j].footprint;
        best->num_bins += c;
      }
    }
  }
  return best;
}

}  // namespace gaploc
