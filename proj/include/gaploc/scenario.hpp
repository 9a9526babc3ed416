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

#ifndef GAPLOC_SCENARIO_HPP_
#define GAPLOC_SCENARIO_HPP_

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gaploc {

struct LonLat {
  double lon = 0.0;
  double lat = 0.0;
  bool operator==(const LonLat&) const = default;
};

struct BinType {
  std::string id;
  double cost = 0.0;       // purchase price, money units
  double capacity = 0.0;   // m^3
  double footprint = 0.0;  // m^2
  bool operator==(const BinType&) const = default;
};

struct Site {
  std::string id;
  double available_space = 0.0;  // m^2
  std::optional<LonLat> coordinates;
  bool operator==(const Site&) const = default;
};

// A pre-aggregated group of dwellings. `rates` is aligned with
// Scenario::fractions() and holds m^3/day per fraction.
struct GeneratorGroup {
  std::string id;
  std::vector<double> rates;
  std::optional<LonLat> coordinates;
  bool operator==(const GeneratorGroup&) const = default;

  double total_rate() const;
};

struct FrequencyPattern {
  std::string id;
  int period_days = 1;  // days between two consecutive visits
  bool operator==(const FrequencyPattern&) const = default;
};

using Matrix = std::vector<std::vector<double>>;

// Raw, unvalidated instance content. Build a Scenario from it with
// Scenario::create().
struct ScenarioData {
  std::string name;
  std::vector<Site> sites;
  std::vector<GeneratorGroup> generators;
  std::vector<BinType> bins;
  std::vector<std::string> fractions;
  std::vector<FrequencyPattern> frequencies;
  Matrix distances;  // generators x sites, meters
  std::optional<Matrix> site_distances;  // sites x sites, meters
  double max_distance = 0.0;  // D, meters
  bool operator==(const ScenarioData&) const = default;
};

// Immutable, validated problem instance. Copies share the underlying data.
class Scenario {
 public:
  // Validates every invariant and throws ValidationError naming the first
  // offending item.
  static Scenario create(ScenarioData data);

  const ScenarioData& data() const { return *data_; }
  const std::string& name() const { return data_->name; }
  const std::vector<Site>& sites() const { return data_->sites; }
  const std::vector<GeneratorGroup>& generators() const { return data_->generators; }
  const std::vector<BinType>& bins() const { return data_->bins; }
  const std::vector<std::string>& fractions() const { return data_->fractions; }
  const std::vector<FrequencyPattern>& frequencies() const { return data_->frequencies; }
  double max_distance() const { return data_->max_distance; }

  std::size_t num_sites() const { return data_->sites.size(); }
  std::size_t num_generators() const { return data_->generators.size(); }
  std::size_t num_bins() const { return data_->bins.size(); }
  std::size_t num_fractions() const { return data_->fractions.size(); }
  std::size_t num_frequencies() const { return data_->frequencies.size(); }

  double distance(std::size_t generator, std::size_t site) const {
    return data_->distances[generator][site];
  }
  bool reachable(std::size_t generator, std::size_t site) const {
    return distance(generator, site) <= data_->max_distance;
  }
  double rate(std::size_t generator, std::size_t fraction) const {
    return data_->generators[generator].rates[fraction];
  }

  // Id lookups; throw UnknownId.
  std::size_t site_index(std::string_view id) const;
  std::size_t generator_index(std::string_view id) const;
  std::size_t bin_index(std::string_view id) const;
  std::size_t fraction_index(std::string_view id) const;
  std::size_t frequency_index(std::string_view id) const;

  // Copy with a different threshold distance D; revalidated.
  Scenario with_max_distance(double max_distance) const;

  bool operator==(const Scenario& other) const { return data() == other.data(); }

 private:
  explicit Scenario(std::shared_ptr<const ScenarioData> data) : data_(std::move(data)) {}

  std::shared_ptr<const ScenarioData> data_;
};

// Site indices i with d_pi <= D, ascending.
std::vector<std::size_t> reachable_site_indices(const Scenario& s, std::size_t generator);

// Site ids i with d_pi <= D for the named generator.
std::set<std::string> reachable_sites(const Scenario& s, std::string_view generator_id);

// Scenario JSON document I/O. Parse failures throw ParseError, missing or
// mistyped fields SchemaError, invariant violations ValidationError.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

// Canonical form: fixed key order, shortest round-trip number formatting.
std::string to_canonical_json(const Scenario& s);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

}  // namespace gaploc

#endif  // GAPLOC_SCENARIO_HPP_
