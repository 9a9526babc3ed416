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

#include "gaploc/solution_io.hpp"

#include <fstream>
#include <sstream>

#include "gaploc/errors.hpp"
#include "json.hpp"

namespace gaploc {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> SplitAt(const std::string& key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = key.find('@', start);
    parts.push_back(key.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return parts;
}

const Json& Object(const Json& doc, const char* key) {
  static const Json kEmpty = Json::object();
  auto it = doc.find(key);
  if (it == doc.end()) return kEmpty;
  if (!it->is_object()) throw SchemaError(std::string("field '") + key + "' must be an object");
  return *it;
}

}  // namespace

std::string solution_to_json(const Scenario& s, const Solution& sol) {
  const ObjectiveVector obj = eval_objectives(s, sol);
  Json doc;
  doc["assignment"] = Json::object();
  for (std::size_t p = 0; p < s.num_generators(); ++p) {
    if (sol.assignment[p]) {
      doc["assignment"][s.generators()[p].id] = s.sites()[*sol.assignment[p]].id;
    }
  }
  doc["frequencies"] = Json::object();
  for (std::size_t h = 0; h < s.num_fractions(); ++h) {
    for (std::size_t i = 0; i < s.num_sites(); ++i) {
      if (const auto& y = sol.freq(h, i)) {
        doc["frequencies"][s.fractions()[h] + "@" + s.sites()[i].id] = s.frequencies()[*y].id;
      }
    }
  }
  doc["bins"] = Json::object();
  for (std::size_t j = 0; j < s.num_bins(); ++j) {
    for (std::size_t h = 0; h < s.num_fractions(); ++h) {
      for (std::size_t i = 0; i < s.num_sites(); ++i) {
        if (const int c = sol.bins(j, h, i); c != 0) {
          doc["bins"][s.bins()[j].id + "@" + s.fractions()[h] + "@" + s.sites()[i].id] = c;
        }
      }
    }
  }
  doc["objectives"] = {{"f1", obj.f1}, {"f2", obj.f2}, {"f3", obj.f3}};
  return doc.dump(2) + "\n";
}

Solution parse_solution(const Scenario& s, std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("solution is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("solution document must be a JSON object");
  Solution sol = Solution::empty(s);
  for (const auto& [key, value] : Object(doc, "assignment").items()) {
    if (!value.is_string()) throw SchemaError("assignment of '" + key + "' must be a site id");
    sol.assignment[s.generator_index(key)] = s.site_index(value.get<std::string>());
  }
  for (const auto& [key, value] : Object(doc, "frequencies").items()) {
    const auto parts = SplitAt(key);
    if (parts.size() != 2) throw SchemaError("frequency key '" + key + "' must be fraction@site");
    if (!value.is_string()) throw SchemaError("frequency of '" + key + "' must be an id");
    sol.freq(s.fraction_index(parts[0]), s.site_index(parts[1])) =
        s.frequency_index(value.get<std::string>());
  }
  for (const auto& [key, value] : Object(doc, "bins").items()) {
    const auto parts = SplitAt(key);
    if (parts.size() != 3) throw SchemaError("bin key '" + key + "' must be bin@fraction@site");
    if (!value.is_number_integer()) throw SchemaError("bin count of '" + key + "' must be an integer");
    sol.bins(s.bin_index(parts[0]), s.fraction_index(parts[1]), s.site_index(parts[2])) =
        value.get<int>();
  }
  return sol;
}

Solution load_solution(const Scenario& s, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open solution file '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_solution(s, text.str());
}

std::string solution_to_csv(const Scenario& s, const Solution& sol) {
  std::ostringstream out;
  out << "site,fraction,bin,count,frequency_days\n";
  for (std::size_t i = 0; i < s.num_sites(); ++i) {
    for (std::size_t h = 0; h < s.num_fractions(); ++h) {
      const auto& y = sol.freq(h, i);
      for (std::size_t j = 0; j < s.num_bins(); ++j) {
        const int c = sol.bins(j, h, i);
        if (c == 0) continue;
        out << s.sites()[i].id << ',' << s.fractions()[h] << ',' << s.bins()[j].id << ',' << c
            << ',';
        if (y) out << s.frequencies()[*y].period_days;
        out << '\n';
      }
    }
  }
  return out.str();
}

std::string solution_to_geojson(const Scenario& s, const Solution& sol) {
  Json fc;
  fc["type"] = "FeatureCollection";
  fc["features"] = Json::array();
  for (std::size_t i = 0; i < s.num_sites(); ++i) {
    if (!sol.site_open(i)) continue;
    const Site& site = s.sites()[i];
    if (!site.coordinates) {
      throw ExportWithoutCoordinates("open site '" + site.id + "' has no lonlat");
    }
    Json props;
    props["site"] = site.id;
    Json configuration = Json::object();
    Json frequencies = Json::object();
    std::string label;
    for (std::size_t h = 0; h < s.num_fractions(); ++h) {
      Json counts = Json::array();
      std::string tuple = "(";
      for (std::size_t j = 0; j < s.num_bins(); ++j) {
        counts.push_back(sol.bins(j, h, i));
        tuple += (j ? ", " : "") + std::to_string(sol.bins(j, h, i));
      }
      tuple += ")";
      configuration[s.fractions()[h]] = counts;
      const auto& y = sol.freq(h, i);
      frequencies[s.fractions()[h]] = y ? Json(s.frequencies()[*y].period_days) : Json(nullptr);
      if (!label.empty()) label += " ";
      label += s.fractions()[h] + " " + tuple;
      if (y) label += " every " + std::to_string(s.frequencies()[*y].period_days) + " d";
    }
    Json bin_types = Json::array();
    for (const auto& b : s.bins()) bin_types.push_back(b.id);
    Json served = Json::array();
    for (std::size_t p = 0; p < s.num_generators(); ++p) {
      if (sol.assignment[p] == i) served.push_back(s.generators()[p].id);
    }
    props["bin_types"] = std::move(bin_types);
    props["bin_configuration"] = std::move(configuration);
    props["frequency_days"] = std::move(frequencies);
    props["generators"] = std::move(served);
    props["label"] = label;
    Json feature;
    feature["type"] = "Feature";
    feature["geometry"] = {{"type", "Point"},
                           {"coordinates", {site.coordinates->lon, site.coordinates->lat}}};
    feature["properties"] = std::move(props);
    fc["features"].push_back(std::move(feature));
  }
  return fc.dump(2) + "\n";
}

Solution heuristic_to_solution(const Scenario& s, const HeuristicSolution& h) {
  std::optional<std::size_t> daily;
  for (std::size_t y = 0; y < s.num_frequencies() && !daily; ++y) {
    if (s.frequencies()[y].period_days == 1) daily = y;
  }
  if (!daily) throw ValidationError("scenario has no daily frequency pattern");
  Solution sol = Solution::empty(s);
  sol.assignment = h.assignment;
  for (const auto& in : h.installs) {
    for (std::size_t j = 0; j < s.num_bins(); ++j) sol.bins(j, 0, in.site) = in.counts[j];
    for (std::size_t f = 0; f < s.num_fractions(); ++f) sol.freq(f, in.site) = daily;
  }
  return sol;
}

}  // namespace gaploc
