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


#include "doctest.h"
#include "gaploc/instance_gen.hpp"
#include "gaploc/oracle.hpp"

using namespace gaploc;

TEST_CASE("generators are deterministic in the seed") {
  for (std::uint64_t seed : {1ULL, 42ULL, 1004ULL}) {
    CHECK(random_tiny_instance(seed) == random_tiny_instance(seed));
    CHECK(to_canonical_json(random_colocated_instance(seed)) ==
          to_canonical_json(random_colocated_instance(seed)));
  }
  CHECK_FALSE(random_tiny_instance(1) == random_tiny_instance(2));
}

TEST_CASE("tiny instances respect their size limits and validate") {
  TinyInstanceOptions opts;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Scenario s = random_tiny_instance(seed, opts);
    CHECK(s.num_generators() >= 1);
    CHECK(s.num_generators() <= opts.max_generators);
    CHECK(s.num_sites() <= opts.max_sites);
    CHECK(s.num_fractions() <= opts.max_fractions);
    CHECK(s.num_frequencies() <= opts.max_frequencies);
    CHECK_NOTHROW(Scenario::create(s.data()));
    for (std::size_t p = 0; p < s.num_generators(); ++p) {
      CHECK_FALSE(reachable_site_indices(s, p).empty());
    }
  }
}

TEST_CASE("co-located instances pair each generator with a site") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Scenario s = random_colocated_instance(seed, 6);
    REQUIRE(s.num_sites() == 6);
    REQUIRE(s.num_generators() == 6);
    for (std::size_t p = 0; p < 6; ++p) {
      CHECK(s.distance(p, p) == 0.0);
      CHECK(s.rate(p, 0) <= s.sites()[p].available_space);
    }
  }
}
