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

#include "gaploc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "gaploc/errors.hpp"

namespace gaploc {

namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

std::string Format(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

bool FiniteNonNegative(double v) { return std::isfinite(v) && v >= 0.0; }
bool FinitePositive(double v) { return std::isfinite(v) && v > 0.0; }

template <typename T, typename IdOf>
void RequireUniqueIds(const std::vector<T>& items, IdOf id_of, const char* kind) {
  std::unordered_set<std::string> seen;
  for (const T& item : items) {
    const std::string& id = id_of(item);
    Require(!id.empty(), std::string(kind) + " with empty id");
    Require(seen.insert(id).second, std::string("duplicate ") + kind + " id '" + id + "'");
  }
}

template <typename T, typename IdOf>
std::size_t FindIndex(const std::vector<T>& items, std::string_view id, IdOf id_of,
                      const char* kind) {
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (id_of(items[k]) == id) return k;
  }
  throw UnknownId(std::string("unknown ") + kind + " id '" + std::string(id) + "'");
}

void Validate(const ScenarioData& d) {
  Require(!d.sites.empty(), "scenario has no sites");
  Require(!d.generators.empty(), "scenario has no generators");
  Require(!d.bins.empty(), "scenario has no bin types");
  Require(!d.fractions.empty(), "scenario has no waste fractions");
  Require(!d.frequencies.empty(), "scenario has no frequency patterns");

  RequireUniqueIds(d.sites, [](const Site& s) -> const std::string& { return s.id; }, "site");
  RequireUniqueIds(d.generators,
                   [](const GeneratorGroup& g) -> const std::string& { return g.id; },
                   "generator");
  RequireUniqueIds(d.bins, [](const BinType& b) -> const std::string& { return b.id; }, "bin");
  RequireUniqueIds(d.fractions, [](const std::string& f) -> const std::string& { return f; },
                   "fraction");
  RequireUniqueIds(d.frequencies,
                   [](const FrequencyPattern& f) -> const std::string& { return f.id; },
                   "frequency");

  for (const BinType& b : d.bins) {
    Require(FinitePositive(b.cost), "bin '" + b.id + "': cost must be > 0");
    Require(FinitePositive(b.capacity), "bin '" + b.id + "': capacity must be > 0");
    Require(FinitePositive(b.footprint), "bin '" + b.id + "': footprint must be > 0");
  }
  for (const Site& s : d.sites) {
    Require(FinitePositive(s.available_space),
            "site '" + s.id + "': available space must be > 0");
  }
  for (const GeneratorGroup& g : d.generators) {
    Require(g.rates.size() == d.fractions.size(),
            "generator '" + g.id + "': rate vector does not match the fraction list");
    bool any_positive = false;
    for (double r : g.rates) {
      Require(FiniteNonNegative(r), "generator '" + g.id + "': generation rates must be >= 0");
      any_positive = any_positive || r > 0.0;
    }
    Require(any_positive, "generator '" + g.id + "': needs at least one positive rate");
  }
  for (const FrequencyPattern& f : d.frequencies) {
    Require(f.period_days >= 1, "frequency '" + f.id + "': period must be >= 1 day");
  }
  Require(FinitePositive(d.max_distance), "max distance D must be > 0");

  Require(d.distances.size() == d.generators.size(),
          "distance matrix must have one row per generator");
  for (std::size_t p = 0; p < d.distances.size(); ++p) {
    const auto& row = d.distances[p];
    const std::string& gid = d.generators[p].id;
    Require(row.size() == d.sites.size(),
            "distance row of generator '" + gid + "' must have one entry per site");
    for (double v : row) {
      Require(FiniteNonNegative(v), "distance row of generator '" + gid +
                                        "' has a negative or non-finite entry");
    }
    const bool reachable = std::any_of(row.begin(), row.end(),
                                       [&](double v) { return v <= d.max_distance; });
    Require(reachable, "generator '" + gid + "' has no site within D = " +
                           Format(d.max_distance) + " m");
  }

  if (d.site_distances) {
    const Matrix& m = *d.site_distances;
    Require(m.size() == d.sites.size(), "site distance matrix must be sites x sites");
    for (const auto& row : m) {
      Require(row.size() == d.sites.size(), "site distance matrix must be sites x sites");
      for (double v : row) {
        Require(FiniteNonNegative(v), "site distance matrix has a negative or non-finite entry");
      }
    }
  }
}

}  // namespace

double GeneratorGroup::total_rate() const {
  return std::accumulate(rates.begin(), rates.end(), 0.0);
}

Scenario Scenario::create(ScenarioData data) {
  Validate(data);
  return Scenario(std::make_shared<const ScenarioData>(std::move(data)));
}

std::size_t Scenario::site_index(std::string_view id) const {
  return FindIndex(data_->sites, id, [](const Site& s) -> const std::string& { return s.id; },
                   "site");
}

std::size_t Scenario::generator_index(std::string_view id) const {
  return FindIndex(data_->generators, id,
                   [](const GeneratorGroup& g) -> const std::string& { return g.id; },
                   "generator");
}

std::size_t Scenario::bin_index(std::string_view id) const {
  return FindIndex(data_->bins, id, [](const BinType& b) -> const std::string& { return b.id; },
                   "bin");
}

std::size_t Scenario::fraction_index(std::string_view id) const {
  return FindIndex(data_->fractions, id, [](const std::string& f) -> const std::string& { return f; },
                   "fraction");
}

std::size_t Scenario::frequency_index(std::string_view id) const {
  return FindIndex(data_->frequencies, id,
                   [](const FrequencyPattern& f) -> const std::string& { return f.id; },
                   "frequency");
}

Scenario Scenario::with_max_distance(double max_distance) const {
  ScenarioData copy = *data_;
  copy.max_distance = max_distance;
  return create(std::move(copy));
}

std::vector<std::size_t> reachable_site_indices(const Scenario& s, std::size_t generator) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.num_sites(); ++i) {
    if (s.reachable(generator, i)) out.push_back(i);
  }
  return out;
}

std::set<std::string> reachable_sites(const Scenario& s, std::string_view generator_id) {
  const std::size_t p = s.generator_index(generator_id);
  std::set<std::string> out;
  for (std::size_t i : reachable_site_indices(s, p)) out.insert(s.sites()[i].id);
  return out;
}

}  // namespace gaploc
