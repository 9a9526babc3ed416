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

#include "gaploc/pagerank.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>

#include "gaploc/errors.hpp"
#include "gaploc/model.hpp"
#include "gaploc/warnings.hpp"

namespace gaploc {

namespace {

constexpr double kEarthRadius = 6371008.8;  // mean radius, m
constexpr double kTol = 1e-9;

double Projected(const LonLat& a, const LonLat& b) {
  const double rad = std::numbers::pi / 180.0;
  const double mean_lat = 0.5 * (a.lat + b.lat) * rad;
  const double dx = (b.lon - a.lon) * rad * std::cos(mean_lat) * kEarthRadius;
  const double dy = (b.lat - a.lat) * rad * kEarthRadius;
  return std::hypot(dx, dy);
}

}  // namespace

Matrix site_distance_matrix(const Scenario& s) {
  if (s.data().site_distances) return *s.data().site_distances;
  const auto& sites = s.sites();
  for (const auto& site : sites) {
    if (!site.coordinates) {
      throw MissingSiteDistances("site '" + site.id +
                                 "' has no coordinates and the scenario has no site_distances");
    }
  }
  Matrix d(sites.size(), std::vector<double>(sites.size(), 0.0));
  for (std::size_t j = 0; j < sites.size(); ++j) {
    for (std::size_t k = j + 1; k < sites.size(); ++k) {
      d[j][k] = d[k][j] = Projected(*sites[j].coordinates, *sites[k].coordinates);
    }
  }
  return d;
}

SiteGraph make_graph(std::vector<std::string> ids, std::vector<double> mass,
                     const Matrix& distances) {
  const std::size_t n = ids.size();
  SiteGraph g;
  g.weight.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      double d = distances[j][k];
      if (d <= 0.0) {
        warn("sites '" + ids[j] + "' and '" + ids[k] + "' coincide; using a 1 m distance");
        d = kFloorDistance;
      }
      g.weight[j][k] = g.weight[k][j] = (mass[j] + mass[k]) / d;
    }
  }
  g.ids = std::move(ids);
  g.mass = std::move(mass);
  return g;
}

SiteGraph build_graph(const Scenario& s) {
  const Matrix d = site_distance_matrix(s);
  std::vector<double> mass(s.num_sites(), 0.0);
  for (std::size_t p = 0; p < s.num_generators(); ++p) {
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < s.num_sites(); ++i) {
      if (s.distance(p, i) < s.distance(p, nearest)) nearest = i;
    }
    mass[nearest] += s.generators()[p].total_rate();
  }
  std::vector<std::string> ids;
  for (const auto& site : s.sites()) ids.push_back(site.id);
  return make_graph(std::move(ids), std::move(mass), d);
}

RankVector pagerank(const SiteGraph& g, const PageRankOptions& opts) {
  const std::size_t n = g.ids.size();
  if (n == 0) throw ValidationError("pagerank needs at least one vertex");
  std::vector<double> out_weight(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) out_weight[j] += g.weight[j][k];
  }
  RankVector r;
  r.ids = g.ids;
  r.rank.assign(n, opts.damping);
  std::vector<double> next(n);
  r.residual = std::numeric_limits<double>::infinity();
  while (r.iterations < opts.max_iterations && r.residual > opts.tolerance) {
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && out_weight[j] > 0.0) sum += g.weight[i][j] * r.rank[j] / out_weight[j];
      }
      next[i] = (1.0 - opts.damping) + opts.damping * sum;
    }
    r.residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      r.residual = std::max(r.residual, std::abs(next[i] - r.rank[i]));
    }
    r.rank.swap(next);
    ++r.iterations;
  }
  return r;
}

std::vector<std::size_t> rank_order(const RankVector& r) {
  std::vector<std::size_t> order(r.ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (r.rank[a] != r.rank[b]) return r.rank[a] > r.rank[b];
    return r.ids[a] < r.ids[b];
  });
  return order;
}

std::string_view policy_name(Policy policy) {
  switch (policy) {
    case Policy::kVol:
      return "vol";
    case Policy::kDist:
      return "dist";
    case Policy::kCost:
      return "cost";
  }
  return "unknown";
}

Policy parse_policy(std::string_view name) {
  std::string lower(name);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "vol") return Policy::kVol;
  if (lower == "dist") return Policy::kDist;
  if (lower == "cost") return Policy::kCost;
  throw UnknownPolicy("unknown policy '" + std::string(name) + "' (expected vol, dist or cost)");
}

HeuristicSolution construct(const Scenario& s, const RankVector& ranks, Policy policy) {
  if (ranks.ids.size() != s.num_sites()) {
    throw ValidationError("rank vector does not cover every site");
  }
  const std::size_t P = s.num_generators();
  HeuristicSolution out;
  out.policy = policy;
  out.assignment.assign(P, std::nullopt);

  std::vector<double> waste(P);
  double unserved = 0.0;
  for (std::size_t p = 0; p < P; ++p) {
    waste[p] = s.generators()[p].total_rate();
    unserved += waste[p];
  }

  std::map<double, std::vector<std::vector<int>>> configs_by_space;
  for (std::size_t r : rank_order(ranks)) {
    if (unserved <= kTol) break;
    const std::size_t i = s.site_index(ranks.ids[r]);
    out.order.push_back(i);

    std::vector<std::size_t> cands;
    for (std::size_t p = 0; p < P; ++p) {
      if (!out.assignment[p] && s.reachable(p, i)) cands.push_back(p);
    }
    if (cands.empty()) continue;
    std::stable_sort(cands.begin(), cands.end(), [&](std::size_t a, std::size_t b) {
      return s.distance(a, i) < s.distance(b, i);
    });

    const double space = s.sites()[i].available_space;
    auto it = configs_by_space.find(space);
    if (it == configs_by_space.end()) {
      it = configs_by_space.emplace(space, enumerate_bin_configurations(s, space)).first;
    }

    std::optional<SiteInstall> best;
    double best_avg = 0.0;
    for (const auto& counts : it->second) {
      SiteInstall c;
      c.site = i;
      c.counts = counts;
      for (std::size_t j = 0; j < s.num_bins(); ++j) {
        c.capacity += counts[j] * s.bins()[j].capacity;
        c.cost += counts[j] * s.bins()[j].cost;
      }
      if (policy != Policy::kVol && c.capacity + kTol < waste[cands.front()]) continue;
      double left = c.capacity, dist = 0.0;
      for (std::size_t p : cands) {
        if (waste[p] <= left + kTol) {
          left -= waste[p];
          c.volume += waste[p];
          dist += s.distance(p, i);
          c.generators.push_back(p);
        }
      }
      const double avg = c.generators.empty() ? std::numeric_limits<double>::infinity()
                                              : dist / static_cast<double>(c.generators.size());
      bool better = !best;
      if (best) {
        switch (policy) {
          case Policy::kVol:
            better = c.volume > best->volume ||
                     (c.volume == best->volume && c.cost < best->cost);
            break;
          case Policy::kDist:
            better = avg < best_avg || (avg == best_avg && c.volume > best->volume) ||
                     (avg == best_avg && c.volume == best->volume && c.cost < best->cost);
            break;
          case Policy::kCost:
            better = c.cost < best->cost || (c.cost == best->cost && c.volume > best->volume);
            break;
        }
      }
      if (better) {
        best = std::move(c);
        best_avg = avg;
      }
    }

    if (!best) {
      out.skipped.push_back(s.sites()[i].id);
      continue;
    }
    if (best->generators.empty()) continue;
    for (std::size_t p : best->generators) {
      out.assignment[p] = i;
      unserved -= waste[p];
    }
    out.installs.push_back(std::move(*best));
  }
  return out;
}

HeuristicSummary evaluate_heuristic(const Scenario& s, const HeuristicSolution& h) {
  HeuristicSummary sum;
  double dist = 0.0;
  for (std::size_t p = 0; p < s.num_generators(); ++p) {
    const double w = s.generators()[p].total_rate();
    sum.total += w;
    if (!h.assignment[p]) continue;
    sum.collected += w;
    dist += s.distance(p, *h.assignment[p]);
    ++sum.served;
  }
  for (const auto& install : h.installs) sum.cost += install.cost;
  if (sum.served > 0) sum.average_distance = dist / static_cast<double>(sum.served);
  if (sum.total > 0.0) sum.collected_fraction = sum.collected / sum.total;
  return sum;
}

std::vector<std::string> audit_heuristic(const Scenario& s, const HeuristicSolution& h) {
  std::vector<std::string> issues;
  if (h.assignment.size() != s.num_generators()) {
    issues.push_back("assignment does not cover the generator list");
    return issues;
  }
  std::vector<int> installs_at(s.num_sites(), 0);
  std::vector<int> listed(s.num_generators(), 0);
  for (const auto& in : h.installs) {
    const std::string& site = s.sites()[in.site].id;
    if (++installs_at[in.site] > 1) issues.push_back("site '" + site + "' installed twice");
    double footprint = 0.0, capacity = 0.0, volume = 0.0;
    for (std::size_t j = 0; j < s.num_bins(); ++j) {
      if (in.counts[j] < 0) issues.push_back("negative bin count at site '" + site + "'");
      footprint += in.counts[j] * s.bins()[j].footprint;
      capacity += in.counts[j] * s.bins()[j].capacity;
    }
    if (footprint > s.sites()[in.site].available_space + kTol) {
      issues.push_back("site '" + site + "' exceeds its space");
    }
    for (std::size_t p : in.generators) {
      ++listed[p];
      volume += s.generators()[p].total_rate();
      if (!s.reachable(p, in.site)) {
        issues.push_back("generator '" + s.generators()[p].id + "' is beyond D of site '" +
                         site + "'");
      }
      if (h.assignment[p] != in.site) {
        issues.push_back("generator '" + s.generators()[p].id + "' is listed at site '" + site +
                         "' but assigned elsewhere");
      }
    }
    if (volume > capacity + kTol * std::max(1.0, capacity)) {
      issues.push_back("daily volume at site '" + site + "' exceeds its capacity");
    }
  }
  for (std::size_t p = 0; p < s.num_generators(); ++p) {
    if (listed[p] > 1 || (h.assignment[p] && listed[p] == 0)) {
      issues.push_back("generator '" + s.generators()[p].id + "' has an inconsistent assignment");
    }
  }
  return issues;
}

}  // namespace gaploc
