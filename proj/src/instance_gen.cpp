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

#include "gaploc/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace gaploc {

namespace {

constexpr LonLat kOrigin{-56.1645, -34.9011};
constexpr double kEarthRadius = 6371008.8;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

LonLat ToLonLat(Point p) {
  const double rad = std::numbers::pi / 180.0;
  const double lat = kOrigin.lat + p.y / kEarthRadius / rad;
  const double lon = kOrigin.lon + p.x / (kEarthRadius * std::cos(kOrigin.lat * rad)) / rad;
  return {std::round(lon * 1e7) / 1e7, std::round(lat * 1e7) / 1e7};
}

double Meters(Point a, Point b) { return std::round(std::hypot(a.x - b.x, a.y - b.y)); }

const BinType kCatalog[] = {
    {"j1", 1000.0, 1.0, 1.0},
    {"j2", 2000.0, 2.0, 2.0},
    {"j3", 3000.0, 3.0, 3.0},
};

template <typename T>
T Pick(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Matrix SiteMatrix(const std::vector<Point>& sites) {
  Matrix m(sites.size(), std::vector<double>(sites.size(), 0.0));
  for (std::size_t j = 0; j < sites.size(); ++j) {
    for (std::size_t k = 0; k < sites.size(); ++k) m[j][k] = Meters(sites[j], sites[k]);
  }
  return m;
}

}  // namespace

Scenario random_tiny_instance(std::uint64_t seed, const TinyInstanceOptions& opts) {
  std::mt19937_64 rng(seed);
  ScenarioData d;
  d.name = "tiny-" + std::to_string(seed);
  d.max_distance = 300.0;
  const std::size_t P = Pick<std::size_t>(rng, 2, std::max<std::size_t>(2, opts.max_generators));
  const std::size_t I = Pick<std::size_t>(rng, 2, std::max<std::size_t>(2, opts.max_sites));
  const std::size_t H = Pick<std::size_t>(rng, 1, std::max<std::size_t>(1, opts.max_fractions));
  const std::size_t Y =
      Pick<std::size_t>(rng, 1, std::clamp<std::size_t>(opts.max_frequencies, 1, 3));

  std::vector<Point> sites(I), gens(P);
  for (std::size_t i = 0; i < I; ++i) {
    sites[i] = {Uniform(rng, 0, 400), Uniform(rng, 0, 400)};
    d.sites.push_back({"i" + std::to_string(i + 1), static_cast<double>(Pick(rng, 3, 5)),
                       ToLonLat(sites[i])});
  }
  for (std::size_t h = 0; h < H; ++h) d.fractions.push_back("h" + std::to_string(h + 1));
  for (std::size_t p = 0; p < P; ++p) {
    gens[p] = {Uniform(rng, 0, 400), Uniform(rng, 0, 400)};
    const bool reaches = std::any_of(sites.begin(), sites.end(), [&](Point s) {
      return Meters(gens[p], s) <= d.max_distance;
    });
    if (!reaches) {
      const Point s = sites[Pick<std::size_t>(rng, 0, I - 1)];
      gens[p] = {s.x + Uniform(rng, -100, 100), s.y + Uniform(rng, -100, 100)};
    }
    GeneratorGroup g{"g" + std::to_string(p + 1), {}, ToLonLat(gens[p])};
    for (std::size_t h = 0; h < H; ++h) g.rates.push_back(Pick(rng, 1, 5) / 10.0);
    d.generators.push_back(std::move(g));
  }
  const std::size_t J = Pick<std::size_t>(rng, 1, 2);
  std::vector<std::size_t> bins{0, 1, 2};
  std::shuffle(bins.begin(), bins.end(), rng);
  bins.resize(J);
  std::sort(bins.begin(), bins.end());
  for (std::size_t j : bins) d.bins.push_back(kCatalog[j]);
  // Daily collection is always available; longer periods are optional.
  std::vector<int> days{2, 3};
  std::shuffle(days.begin(), days.end(), rng);
  days.insert(days.begin(), 1);
  days.resize(Y);
  std::sort(days.begin(), days.end());
  for (int a : days) d.frequencies.push_back({"a" + std::to_string(a), a});

  d.distances.assign(P, std::vector<double>(I));
  for (std::size_t p = 0; p < P; ++p) {
    for (std::size_t i = 0; i < I; ++i) d.distances[p][i] = Meters(gens[p], sites[i]);
  }
  d.site_distances = SiteMatrix(sites);
  return Scenario::create(std::move(d));
}

Scenario random_colocated_instance(std::uint64_t seed, std::size_t num_sites) {
  std::mt19937_64 rng(seed);
  ScenarioData d;
  d.name = "colocated-" + std::to_string(seed);
  d.max_distance = 300.0;
  d.fractions = {"mixed"};
  d.frequencies = {{"a1", 1}, {"a2", 2}, {"a3", 3}};
  d.bins.assign(std::begin(kCatalog), std::end(kCatalog));
  const std::size_t n = std::max<std::size_t>(2, num_sites);
  const double side = 250.0 * std::sqrt(static_cast<double>(n));

  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = {Uniform(rng, 0, side), Uniform(rng, 0, side)};
    const double space = static_cast<double>(Pick(rng, 3, 5));
    d.sites.push_back({"i" + std::to_string(i + 1), space, ToLonLat(pts[i])});
    // Largest single-site capacity equals the space with this catalog.
    const double rate = std::round(Uniform(rng, 0.2, std::min(space, 2.5)) * 100.0) / 100.0;
    d.generators.push_back({"g" + std::to_string(i + 1), {rate}, ToLonLat(pts[i])});
  }
  d.distances.assign(n, std::vector<double>(n));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < n; ++i) d.distances[p][i] = Meters(pts[p], pts[i]);
  }
  d.site_distances = SiteMatrix(pts);
  return Scenario::create(std::move(d));
}

}  // namespace gaploc
