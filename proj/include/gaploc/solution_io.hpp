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

#ifndef GAPLOC_SOLUTION_IO_HPP_
#define GAPLOC_SOLUTION_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "gaploc/model.hpp"
#include "gaploc/pagerank.hpp"
#include "gaploc/scenario.hpp"

namespace gaploc {

// {"assignment":{p:i}, "frequencies":{"h@i":y}, "bins":{"j@h@i":count},
//  "objectives":{"f1","f2","f3"}}. Zero bin counts are omitted.
std::string solution_to_json(const Scenario& s, const Solution& sol);

// Reads the format above; "objectives" is ignored. Throws ParseError,
// SchemaError or UnknownId.
Solution parse_solution(const Scenario& s, std::string_view json_text);
Solution load_solution(const Scenario& s, const std::filesystem::path& path);

// Rows "site,fraction,bin,count,frequency" for every non-zero bin count.
std::string solution_to_csv(const Scenario& s, const Solution& sol);

// RFC 7946 FeatureCollection with one Point per open site. Throws
// ExportWithoutCoordinates when an open site has no lonlat.
std::string solution_to_geojson(const Scenario& s, const Solution& sol);

// Heuristic result as a model solution at the daily frequency pattern,
// bins booked under the first fraction. Unserved generators stay unassigned.
Solution heuristic_to_solution(const Scenario& s, const HeuristicSolution& h);

}  // namespace gaploc

#endif  // GAPLOC_SOLUTION_IO_HPP_
