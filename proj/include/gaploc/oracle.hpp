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

#ifndef GAPLOC_ORACLE_HPP_
#define GAPLOC_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "gaploc/model.hpp"
#include "gaploc/scenario.hpp"

namespace gaploc {

struct OracleEntry {
  Solution solution;
  ObjectiveVector objectives;
  bool non_dominated = false;
};

inline constexpr double kDefaultOracleCap = 1e7;

// Every feasible solution reachable by enumerating assignments within D and
// a frequency choice (or none) per (fraction, site), each completed with the
// cheapest bins. Throws InstanceTooLarge when the number of combinations
// exceeds `cap`.
std::vector<OracleEntry> enumerate_oracle(const Scenario& s, double cap = kDefaultOracleCap);

// Objective vectors of the non-dominated entries, duplicates removed, sorted
// by (f1, f2, f3).
std::vector<ObjectiveVector> oracle_front(const std::vector<OracleEntry>& entries);

}  // namespace gaploc

#endif  // GAPLOC_ORACLE_HPP_
