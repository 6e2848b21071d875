// Copyright 2026 The globalgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "gg/error.hpp"
#include "gg/exact.hpp"
#include "gg/lattice.hpp"
#include "gg/pauli.hpp"
#include "gg/topology.hpp"
#include "oracles.hpp"

using gg::RegionSpec;

namespace {

const double kLn2 = std::log(2.0);

std::vector<oracle::Symplectic> toric_generators(const gg::Lattice& lat) {
  std::vector<oracle::Symplectic> g;
  for (const auto& v : lat.vertices) {
    oracle::Symplectic s{std::vector<int>(lat.n_sites, 0), std::vector<int>(lat.n_sites, 0)};
    for (int e : v) s.x[e] = 1;
    g.push_back(s);
  }
  for (const auto& p : lat.plaquettes) {
    oracle::Symplectic s{std::vector<int>(lat.n_sites, 0), std::vector<int>(lat.n_sites, 0)};
    for (int e : p) s.z[e] = 1;
    g.push_back(s);
  }
  return g;
}

std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Seven-term combination from GF(2) ranks, in nats.
double oracle_gamma(const std::vector<oracle::Symplectic>& g, int n, const RegionSpec& r) {
  auto s = [&](const std::vector<int>& region) { return oracle::stabilizer_entropy_bits(g, n, region) * kLn2; };
  const double comb = s(r.a) + s(r.b) + s(r.c) + s(join(join(r.a, r.b), r.c)) - s(join(r.a, r.b)) - s(join(r.a, r.c)) -
                      s(join(r.b, r.c));
  return -comb;
}

}  // namespace

TEST(Regions, DefaultToric) {
  const auto lat = gg::build_toric_edge(2, 2);
  const RegionSpec r = gg::default_toric_regions(lat);
  EXPECT_EQ(r.a, (std::vector<int>{0, 3}));
  EXPECT_EQ(r.b, (std::vector<int>{2, 5}));
  EXPECT_EQ(r.c, (std::vector<int>{6, 8}));
  EXPECT_NO_THROW(gg::validate(r, 12));
  EXPECT_THROW(gg::default_toric_regions(gg::build_toric_edge(1, 2)), gg::ArgumentError);
}

TEST(Regions, Validation) {
  EXPECT_THROW(gg::validate(RegionSpec{{0}, {0}, {1}}, 4), gg::ArgumentError);
  EXPECT_THROW(gg::validate(RegionSpec{{0}, {1}, {}}, 4), gg::ArgumentError);
  EXPECT_THROW(gg::validate(RegionSpec{{0}, {1}, {2, 3}}, 4), gg::ArgumentError);
  EXPECT_THROW(gg::validate(RegionSpec{{0}, {1}, {7}}, 4), gg::ArgumentError);
  std::vector<int> big;
  for (int q = 2; q < 16; ++q) big.push_back(q);
  EXPECT_THROW(gg::validate(RegionSpec{{0}, {1}, big}, 20), gg::ArgumentError);
}

TEST(Regions, JsonRoundTrip) {
  const RegionSpec r{{0, 3}, {2, 5}, {6, 8}};
  EXPECT_EQ(gg::regions_from_json(gg::to_json(r)), r);
  EXPECT_THROW(gg::regions_from_json(nlohmann::json{{"A", {0}}, {"B", {1}}, {"D", {2}}}), gg::ArgumentError);
  EXPECT_THROW(gg::regions_from_json(nlohmann::json::array()), gg::ArgumentError);
}

TEST(Gamma, ProductStatesVanish) {
  const RegionSpec r{{0, 3}, {2, 5}, {6, 8}};
  EXPECT_NEAR(gg::topological_entropy(gg::StateVector::zero(12), r), 0.0, 1e-9);
  gg::StateVector s = gg::StateVector::zero(12);
  for (int q = 0; q < 12; ++q) gg::apply_one_qubit(s, q, gg::ry(0.3 * q + 0.1));
  EXPECT_NEAR(gg::topological_entropy(s, r), 0.0, 1e-9);
}

TEST(Gamma, StabilizerOracleGivesLn2) {
  const auto lat = gg::build_toric_edge(2, 2);
  const RegionSpec r = gg::default_toric_regions(lat);
  EXPECT_NEAR(oracle_gamma(toric_generators(lat), lat.n_sites, r), kLn2, 1e-15);
}

TEST(Gamma, ToricGroundStateMatchesOracle) {
  const auto lat = gg::build_toric_edge(2, 2);
  const auto gs = gg::ground_energy(gg::toric_code_hamiltonian(lat, 0.0), gg::EdMethod::lanczos);
  const RegionSpec r = gg::default_toric_regions(lat);
  const auto terms = gg::topological_entropy_terms(gs.state, r);
  const auto g = toric_generators(lat);
  EXPECT_NEAR(terms.s_a, oracle::stabilizer_entropy_bits(g, 12, r.a) * kLn2, 1e-8);
  EXPECT_NEAR(terms.s_ab, oracle::stabilizer_entropy_bits(g, 12, join(r.a, r.b)) * kLn2, 1e-8);
  EXPECT_NEAR(terms.gamma, oracle_gamma(g, 12, r), 1e-6);
  EXPECT_DOUBLE_EQ(terms.gamma, -terms.combination);
}

TEST(Gamma, OtherRegionChoicesAgreeWithOracle) {
  const auto lat = gg::build_toric_edge(2, 2);
  const auto gs = gg::ground_energy(gg::toric_code_hamiltonian(lat, 0.0), gg::EdMethod::lanczos);
  const auto g = toric_generators(lat);
  for (const RegionSpec& r : {RegionSpec{{0, 1}, {2, 3}, {4}}, RegionSpec{{5, 6}, {7}, {9, 10, 11}},
                              RegionSpec{{0, 2, 5}, {3, 4}, {6, 8, 9}}}) {
    EXPECT_NEAR(gg::topological_entropy(gs.state, r), oracle_gamma(g, 12, r), 1e-6);
  }
}

TEST(Properties, RelabelingSymmetry) {
  const gg::StateVector s = oracle::random_state(8, 31);
  const RegionSpec r{{0, 1}, {2, 4}, {5}};
  const double ref = gg::topological_entropy(s, r);
  for (const RegionSpec& p : {RegionSpec{r.b, r.a, r.c}, RegionSpec{r.c, r.b, r.a}, RegionSpec{r.b, r.c, r.a}})
    EXPECT_NEAR(gg::topological_entropy(s, p), ref, 1e-12);
}
