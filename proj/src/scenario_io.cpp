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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gaploc/errors.hpp"
#include "gaploc/scenario.hpp"
#include "json.hpp"

namespace gaploc {

namespace {

using Json = nlohmann::ordered_json;

const Json& Field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError("missing field '" + path + "." + key + "'");
  return *it;
}

template <typename T>
T As(const Json& value, const std::string& path) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError("field '" + path + "' has the wrong type");
  }
}

double Number(const Json& value, const std::string& path) {
  if (!value.is_number()) throw SchemaError("field '" + path + "' must be a number");
  return value.get<double>();
}

const Json& Array(const Json& value, const std::string& path) {
  if (!value.is_array()) throw SchemaError("field '" + path + "' must be an array");
  return value;
}

std::optional<LonLat> ReadLonLat(const Json& obj, const std::string& path) {
  auto it = obj.find("lonlat");
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_array() || it->size() != 2) {
    throw SchemaError("field '" + path + ".lonlat' must be [lon, lat]");
  }
  return LonLat{Number((*it)[0], path + ".lonlat[0]"), Number((*it)[1], path + ".lonlat[1]")};
}

Matrix ReadMatrix(const Json& value, const std::string& path) {
  Matrix m;
  for (std::size_t r = 0; r < Array(value, path).size(); ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    std::vector<double> row;
    for (std::size_t c = 0; c < Array(value[r], row_path).size(); ++c) {
      row.push_back(Number(value[r][c], row_path + "[" + std::to_string(c) + "]"));
    }
    m.push_back(std::move(row));
  }
  return m;
}

ScenarioData ReadScenario(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("scenario document must be a JSON object");
  ScenarioData d;
  if (auto it = doc.find("name"); it != doc.end()) d.name = As<std::string>(*it, "name");

  const Json& fractions = Array(Field(doc, "fractions", "$"), "fractions");
  for (std::size_t k = 0; k < fractions.size(); ++k) {
    d.fractions.push_back(As<std::string>(fractions[k], "fractions[" + std::to_string(k) + "]"));
  }

  const Json& sites = Array(Field(doc, "sites", "$"), "sites");
  for (std::size_t k = 0; k < sites.size(); ++k) {
    const std::string path = "sites[" + std::to_string(k) + "]";
    Site s;
    s.id = As<std::string>(Field(sites[k], "id", path), path + ".id");
    s.available_space = Number(Field(sites[k], "space_m2", path), path + ".space_m2");
    s.coordinates = ReadLonLat(sites[k], path);
    d.sites.push_back(std::move(s));
  }

  const Json& generators = Array(Field(doc, "generators", "$"), "generators");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const std::string path = "generators[" + std::to_string(k) + "]";
    GeneratorGroup g;
    g.id = As<std::string>(Field(generators[k], "id", path), path + ".id");
    const Json& rates = Field(generators[k], "rates", path);
    if (!rates.is_object()) throw SchemaError("field '" + path + ".rates' must be an object");
    g.rates.assign(d.fractions.size(), 0.0);
    for (auto it = rates.begin(); it != rates.end(); ++it) {
      auto pos = std::find(d.fractions.begin(), d.fractions.end(), it.key());
      if (pos == d.fractions.end()) {
        throw ValidationError("generator '" + g.id + "' references unknown fraction '" +
                              it.key() + "'");
      }
      g.rates[static_cast<std::size_t>(pos - d.fractions.begin())] =
          Number(it.value(), path + ".rates." + it.key());
    }
    g.coordinates = ReadLonLat(generators[k], path);
    d.generators.push_back(std::move(g));
  }

  const Json& bins = Array(Field(doc, "bins", "$"), "bins");
  for (std::size_t k = 0; k < bins.size(); ++k) {
    const std::string path = "bins[" + std::to_string(k) + "]";
    BinType b;
    b.id = As<std::string>(Field(bins[k], "id", path), path + ".id");
    b.cost = Number(Field(bins[k], "cost", path), path + ".cost");
    b.capacity = Number(Field(bins[k], "cap_m3", path), path + ".cap_m3");
    b.footprint = Number(Field(bins[k], "space_m2", path), path + ".space_m2");
    d.bins.push_back(std::move(b));
  }

  const Json& freqs = Array(Field(doc, "frequencies", "$"), "frequencies");
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    const std::string path = "frequencies[" + std::to_string(k) + "]";
    FrequencyPattern f;
    f.id = As<std::string>(Field(freqs[k], "id", path), path + ".id");
    const Json& days = Field(freqs[k], "days", path);
    if (!days.is_number_integer()) throw SchemaError("field '" + path + ".days' must be an integer");
    f.period_days = days.get<int>();
    d.frequencies.push_back(std::move(f));
  }

  d.max_distance = Number(Field(doc, "D_m", "$"), "D_m");

  const Json& dist = Field(doc, "distances", "$");
  const Json& order = Field(dist, "order", "distances");
  if (As<std::string>(order, "distances.order") != "generators x sites") {
    throw SchemaError("field 'distances.order' must be \"generators x sites\"");
  }
  d.distances = ReadMatrix(Field(dist, "matrix", "distances"), "distances.matrix");

  if (auto it = doc.find("site_distances"); it != doc.end() && !it->is_null()) {
    d.site_distances = ReadMatrix(Field(*it, "matrix", "site_distances"), "site_distances.matrix");
  }
  return d;
}

Json LonLatJson(const LonLat& ll) { return Json::array({ll.lon, ll.lat}); }

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return Scenario::create(ReadScenario(doc));
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string to_canonical_json(const Scenario& s) {
  const ScenarioData& d = s.data();
  Json doc = Json::object();
  doc["name"] = d.name;
  doc["sites"] = Json::array();
  for (const Site& site : d.sites) {
    Json j = {{"id", site.id}, {"space_m2", site.available_space}};
    if (site.coordinates) j["lonlat"] = LonLatJson(*site.coordinates);
    doc["sites"].push_back(std::move(j));
  }
  doc["generators"] = Json::array();
  for (const GeneratorGroup& g : d.generators) {
    Json rates = Json::object();
    for (std::size_t h = 0; h < d.fractions.size(); ++h) rates[d.fractions[h]] = g.rates[h];
    Json j = {{"id", g.id}, {"rates", std::move(rates)}};
    if (g.coordinates) j["lonlat"] = LonLatJson(*g.coordinates);
    doc["generators"].push_back(std::move(j));
  }
  doc["bins"] = Json::array();
  for (const BinType& b : d.bins) {
    doc["bins"].push_back(
        {{"id", b.id}, {"cost", b.cost}, {"cap_m3", b.capacity}, {"space_m2", b.footprint}});
  }
  doc["fractions"] = d.fractions;
  doc["frequencies"] = Json::array();
  for (const FrequencyPattern& f : d.frequencies) {
    doc["frequencies"].push_back({{"id", f.id}, {"days", f.period_days}});
  }
  doc["D_m"] = d.max_distance;
  doc["distances"] = {{"order", "generators x sites"}, {"matrix", d.distances}};
  if (d.site_distances) doc["site_distances"] = {{"matrix", *d.site_distances}};
  return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write scenario file '" + path.string() + "'");
  out << to_canonical_json(s);
}

}  // namespace gaploc
