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

#include "gaploc/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gaploc/errors.hpp"
#include "gaploc/metrics.hpp"

namespace gaploc {

std::vector<OracleEntry> enumerate_oracle(const Scenario& s, double cap) {
  const std::size_t P = s.num_generators(), I = s.num_sites(), H = s.num_fractions(),
                    Y = s.num_frequencies();

  std::vector<std::vector<std::size_t>> options(P);
  double combos = 1.0;
  for (std::size_t p = 0; p < P; ++p) {
    options[p] = reachable_site_indices(s, p);
    combos *= static_cast<double>(options[p].size());
  }
  for (std::size_t c = 0; c < H * I; ++c) combos *= static_cast<double>(Y + 1);
  if (combos > cap) {
    throw InstanceTooLarge("oracle would enumerate " + std::to_string(combos) +
                           " combinations (cap " + std::to_string(cap) + ")");
  }

  std::map<std::pair<std::size_t, std::vector<double>>, std::optional<BinChoice>> cache;
  auto bins_for = [&](std::size_t i, const std::vector<double>& demand) {
    auto key = std::make_pair(i, demand);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, min_cost_bins(s, i, demand)).first;
    return it->second;
  };

  std::vector<OracleEntry> out;
  Solution sol = Solution::empty(s);
  std::vector<std::size_t> pick(P, 0);
  while (true) {
    std::vector<bool> used(I, false);
    for (std::size_t p = 0; p < P; ++p) {
      sol.assignment[p] = options[p][pick[p]];
      used[options[p][pick[p]]] = true;
    }
    // Frequency codes: 0 = none, y + 1 = pattern y. Used sites need one.
    std::vector<std::size_t> code(H * I, 0);
    for (std::size_t i = 0; i < I; ++i) {
      for (std::size_t h = 0; h < H; ++h) code[h * I + i] = used[i] ? 1 : 0;
    }
    while (true) {
      bool ok = true;
      std::fill(sol.bin_counts.begin(), sol.bin_counts.end(), 0);
      for (std::size_t i = 0; i < I && ok; ++i) {
        std::vector<double> demand(H, 0.0);
        for (std::size_t h = 0; h < H; ++h) {
          const std::size_t c = code[h * I + i];
          sol.freq(h, i) = c == 0 ? std::nullopt : std::optional<std::size_t>(c - 1);
          if (c == 0) continue;
          const double days = s.frequencies()[c - 1].period_days;
          for (std::size_t p = 0; p < P; ++p) {
            if (sol.assignment[p] == i) demand[h] += s.rate(p, h) * days;
          }
        }
        const auto choice = bins_for(i, demand);
        if (!choice) {
          ok = false;
          break;
        }
        for (std::size_t j = 0; j < s.num_bins(); ++j) {
          for (std::size_t h = 0; h < H; ++h) sol.bins(j, h, i) = choice->counts[j * H + h];
        }
      }
      if (ok) out.push_back({sol, eval_objectives(s, sol), false});

      std::size_t c = 0;
      for (; c < H * I; ++c) {
        const std::size_t lo = used[c % I] ? 1 : 0;
        if (code[c] < Y) {
          ++code[c];
          break;
        }
        code[c] = lo;
      }
      if (c == H * I) break;
    }

    std::size_t p = 0;
    for (; p < P; ++p) {
      if (++pick[p] < options[p].size()) break;
      pick[p] = 0;
    }
    if (p == P) break;
  }

  // Sorting by (f1, f2, f3) means only earlier points can dominate later ones.
  std::vector<std::size_t> idx(out.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  auto key = [&](std::size_t k) {
    const auto& o = out[k].objectives;
    return std::make_tuple(o.f1, o.f2, o.f3);
  };
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<ObjectiveVector> front;
  for (std::size_t k : idx) {
    const ObjectiveVector& o = out[k].objectives;
    bool dominated = false;
    for (const auto& f : front) {
      if (dominates(f, o)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    out[k].non_dominated = true;
    const bool seen = std::any_of(front.begin(), front.end(), [&](const ObjectiveVector& f) {
      return approx_equal(f, o, kDominanceSlack);
    });
    if (!seen) front.push_back(o);
  }
  return out;
}

std::vector<ObjectiveVector> oracle_front(const std::vector<OracleEntry>& entries) {
  std::vector<ObjectiveVector> pts;
  for (const auto& e : entries) {
    if (e.non_dominated) pts.push_back(e.objectives);
  }
  std::vector<ObjectiveVector> out;
  for (std::size_t k : pareto_filter(pts)) out.push_back(pts[k]);
  std::sort(out.begin(), out.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    return std::tie(a.f1, a.f2, a.f3) < std::tie(b.f1, b.f2, b.f3);
  });
  return out;
}

}  // namespace gaploc
