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

#ifndef GAPLOC_PAGERANK_HPP_
#define GAPLOC_PAGERANK_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaploc/scenario.hpp"

namespace gaploc {

// Fully connected graph over candidate sites. weight[j][k] = (b_j + b_k) / d_jk
// with a zero diagonal.
struct SiteGraph {
  std::vector<std::string> ids;
  std::vector<double> mass;  // b_j, m^3/day
  Matrix weight;
};

inline constexpr double kFloorDistance = 1.0;

// Site-site distance in meters: the scenario's site matrix when present,
// else an equirectangular projection of site coordinates. Throws
// MissingSiteDistances when neither is available.
Matrix site_distance_matrix(const Scenario& s);

// b_j sums the merged-fraction generation of generators whose nearest site
// (first index on ties) is j. Coincident sites use a 1 m distance and warn.
SiteGraph build_graph(const Scenario& s);

// Graph from explicit masses and distances; used by build_graph.
SiteGraph make_graph(std::vector<std::string> ids, std::vector<double> mass,
                     const Matrix& distances);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-8;
  int max_iterations = 200;
};

struct RankVector {
  std::vector<std::string> ids;
  std::vector<double> rank;
  int iterations = 0;
  double residual = 0.0;  // max-abs change of the last sweep
};

// Iterates PR(v) = (1 - d) + d * sum_u w_uv PR(u) / sum_k w_uk from PR = d
// until the max-abs change is within tolerance or max_iterations is reached.
// A vertex with no outgoing weight passes nothing on.
RankVector pagerank(const SiteGraph& g, const PageRankOptions& opts = {});

// Descending rank, ties broken by site id.
std::vector<std::size_t> rank_order(const RankVector& r);

enum class Policy { kVol, kDist, kCost };

std::string_view policy_name(Policy policy);
// Accepts vol, dist and cost (any case). Throws UnknownPolicy.
Policy parse_policy(std::string_view name);

struct SiteInstall {
  std::size_t site = 0;
  std::vector<int> counts;  // per bin type
  std::vector<std::size_t> generators;
  double capacity = 0.0;    // m^3 collected daily
  double volume = 0.0;      // m^3/day assigned
  double cost = 0.0;
};

struct HeuristicSolution {
  Policy policy = Policy::kVol;
  std::vector<SiteInstall> installs;  // in processing order
  std::vector<std::optional<std::size_t>> assignment;
  // Sites that could not cover their nearest candidate under Dist or Cost.
  std::vector<std::string> skipped;
  std::vector<std::size_t> order;  // sites visited
};

// Constructive pass at a daily collection frequency. Sites are taken
// in rank order while waste remains unserved; each picks a bin multiset by
// `policy` and takes candidate generators within D greedily in distance
// order, skipping any that no longer fit.
HeuristicSolution construct(const Scenario& s, const RankVector& ranks, Policy policy);

struct HeuristicSummary {
  double average_distance = 0.0;  // over served generators
  double cost = 0.0;
  double collected = 0.0;         // m^3/day
  double total = 0.0;             // m^3/day
  double collected_fraction = 0.0;
  std::size_t served = 0;
};

HeuristicSummary evaluate_heuristic(const Scenario& s, const HeuristicSolution& h);

// Post-hoc audit: footprint within Es_i, assignments within D, daily volume
// within installed capacity, assignments consistent with installs. Empty iff
// clean.
std::vector<std::string> audit_heuristic(const Scenario& s, const HeuristicSolution& h);

}  // namespace gaploc

#endif  // GAPLOC_PAGERANK_HPP_
