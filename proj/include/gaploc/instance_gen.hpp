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

#ifndef GAPLOC_INSTANCE_GEN_HPP_
#define GAPLOC_INSTANCE_GEN_HPP_

#include <cstddef>
#include <cstdint>

#include "gaploc/scenario.hpp"

namespace gaploc {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct TinyInstanceOptions {
  std::size_t max_generators = 4;
  std::size_t max_sites = 3;
  std::size_t max_fractions = 2;
  std::size_t max_frequencies = 2;
};

// Small random instance on a 400 m square with Euclidean distances, site
// coordinates and a site-site matrix. Every generator reaches a site.
Scenario random_tiny_instance(std::uint64_t seed, const TinyInstanceOptions& opts = {});

// Instance for the constructive heuristics: every generator sits next to a
// candidate site whose space can hold its daily waste, so total capacity
// within D always suffices.
Scenario random_colocated_instance(std::uint64_t seed, std::size_t num_sites = 8);

}  // namespace gaploc

#endif  // GAPLOC_INSTANCE_GEN_HPP_
