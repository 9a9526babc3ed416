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

#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "doctest.h"
#include "gaploc/errors.hpp"
#include "gaploc/instance_gen.hpp"
#include "gaploc/scenario.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace gaploc;
using gaploc::testing::DataPath;
using Json = nlohmann::json;

namespace {

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json T1Doc() { return Json::parse(Slurp(DataPath("T1.json"))); }

template <typename E>
void ExpectRejects(const Json& doc) {
  CHECK_THROWS_AS(parse_scenario(doc.dump()), E);
}

}  // namespace

TEST_CASE("T1 fixture loads with its dimensions") {
  const Scenario s = load_scenario(DataPath("T1.json"));
  CHECK(s.name() == "T1");
  CHECK(s.num_sites() == 2);
  CHECK(s.num_generators() == 3);
  CHECK(s.num_bins() == 2);
  CHECK(s.num_fractions() == 1);
  CHECK(s.num_frequencies() == 2);
  CHECK(s.max_distance() == 300.0);
  CHECK(s.distance(1, 1) == 50.0);
  CHECK(s.rate(0, 0) == 1.0);
  CHECK(s.bins()[1].cost == 2000.0);
  CHECK(s.sites()[0].available_space == 5.0);
  CHECK(s.frequencies()[1].period_days == 2);
  REQUIRE(s.sites()[0].coordinates.has_value());
}

TEST_CASE("reachable sets follow the threshold distance") {
  const Scenario s = load_scenario(DataPath("T1.json"));
  CHECK(reachable_sites(s, "g1") == std::set<std::string>{"i1", "i2"});
  CHECK(reachable_sites(s, "g3") == std::set<std::string>{"i1", "i2"});
  const Scenario tight = s.with_max_distance(200);
  CHECK(reachable_sites(tight, "g1") == std::set<std::string>{"i1"});
  CHECK(reachable_sites(tight, "g2") == std::set<std::string>{"i1", "i2"});
  CHECK(reachable_sites(tight, "g3") == std::set<std::string>{"i2"});
  CHECK_THROWS_AS(reachable_sites(s, "nope"), UnknownId);
}

TEST_CASE("shrinking D below a generator's nearest site fails validation") {
  const Scenario s = load_scenario(DataPath("T1.json"));
  CHECK_THROWS_AS(s.with_max_distance(90), ValidationError);
}

TEST_CASE("catalog fixtures carry the published bin triples") {
  const Scenario mvd = load_scenario(DataPath("MVD-params.json"));
  REQUIRE(mvd.num_bins() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(mvd.bins()[j].cost == 1000.0 * (j + 1));
    CHECK(mvd.bins()[j].capacity == double(j + 1));
    CHECK(mvd.bins()[j].footprint == double(j + 1));
  }
  CHECK(mvd.max_distance() == 300.0);
  CHECK(mvd.num_frequencies() == 3);
  for (const auto& site : mvd.sites()) CHECK(site.available_space == 5.0);

  const Scenario bb = load_scenario(DataPath("BBCA-params.json"));
  REQUIRE(bb.num_bins() == 3);
  CHECK(bb.bins()[0].cost == 2120.0);
  CHECK(bb.bins()[1].capacity == doctest::Approx(1.73));
  CHECK(bb.bins()[2].footprint == doctest::Approx(2.5));
}

TEST_CASE("canonical JSON round-trips") {
  for (const char* name : {"T1.json", "MVD-params.json", "BBCA-params.json", "no-coordinates.json"}) {
    const Scenario s = load_scenario(DataPath(name));
    const Scenario back = parse_scenario(to_canonical_json(s));
    CHECK(back == s);
    CHECK(to_canonical_json(back) == to_canonical_json(s));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Scenario s = random_tiny_instance(seed);
    CHECK(parse_scenario(to_canonical_json(s)) == s);
  }
}

TEST_CASE("error classes separate syntax, shape and domain problems") {
  CHECK_THROWS_AS(load_scenario(DataPath("invalid/corrupt.json")), ParseError);
  CHECK_THROWS_AS(load_scenario(DataPath("does-not-exist.json")), ParseError);
  CHECK_THROWS_AS(load_scenario(DataPath("invalid/unreachable-generator.json")),
                  ValidationError);
  CHECK_THROWS_AS(parse_scenario("[1, 2]"), SchemaError);

  Json doc = T1Doc();
  doc.erase("D_m");
  ExpectRejects<SchemaError>(doc);

  doc = T1Doc();
  doc["sites"][0]["space_m2"] = "five";
  ExpectRejects<SchemaError>(doc);

  doc = T1Doc();
  doc["sites"][0]["space_m2"] = -1;
  ExpectRejects<ValidationError>(doc);

  doc = T1Doc();
  doc["bins"][0]["cost"] = 0;
  ExpectRejects<ValidationError>(doc);

  doc = T1Doc();
  doc["sites"][1]["id"] = "i1";
  ExpectRejects<ValidationError>(doc);

  doc = T1Doc();
  doc["distances"]["matrix"][0][0] = -5;
  ExpectRejects<ValidationError>(doc);

  doc = T1Doc();
  doc["distances"]["matrix"].erase(2);
  ExpectRejects<ValidationError>(doc);

  doc = T1Doc();
  doc["generators"][0]["rates"] = {{"glass", 1.0}};
  ExpectRejects<ValidationError>(doc);

  doc = T1Doc();
  doc["frequencies"][0]["days"] = 0;
  ExpectRejects<ValidationError>(doc);

  doc = T1Doc();
  doc["site_distances"]["matrix"][0].erase(1);
  ExpectRejects<ValidationError>(doc);
}

TEST_CASE("truncated or mutated files never load") {
  const std::string text = Slurp(DataPath("T1.json"));
  for (std::size_t n = 0; n + 1 < text.size(); n += 7) {
    CHECK_THROWS_AS(parse_scenario(text.substr(0, n)), Error);
  }
  std::mt19937 rng(42);
  int loaded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::string mutated = text;
    const std::size_t at = rng() % mutated.size();
    mutated[at] = "{}[],:\"-x0"[rng() % 10];
    try {
      const Scenario s = parse_scenario(mutated);
      // A surviving mutation must still describe a valid instance.
      CHECK_NOTHROW(Scenario::create(s.data()));
      ++loaded;
    } catch (const Error&) {
    }
  }
  CHECK(loaded < 300);
}

TEST_CASE("id lookups") {
  const Scenario s = load_scenario(DataPath("T1.json"));
  CHECK(s.site_index("i2") == 1);
  CHECK(s.generator_index("g3") == 2);
  CHECK(s.bin_index("j1") == 0);
  CHECK(s.fraction_index("mixed") == 0);
  CHECK(s.frequency_index("a2") == 1);
  CHECK_THROWS_AS(s.site_index("i9"), UnknownId);
}
