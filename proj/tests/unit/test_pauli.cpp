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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gg/error.hpp"
#include "gg/lattice.hpp"
#include "gg/pauli.hpp"
#include "oracles.hpp"

using gg::PauliString;
using gg::PauliSum;

namespace {

// Dense oracle built term by term from Kronecker products, letters[q] on qubit q.
oracle::Mat dense_oracle(const PauliSum& h) {
  const auto d = Eigen::Index{1} << h.qubit_count();
  oracle::Mat m = oracle::Mat::Zero(d, d);
  for (const auto& t : h.terms()) {
    std::vector<oracle::Mat> ops;
    for (char c : t.letters) ops.push_back(oracle::pauli(std::string(1, c)));
    m += t.coefficient * oracle::product(ops);
  }
  return m;
}

double dense_expectation(const PauliSum& h, const gg::StateVector& s) {
  const oracle::Vec v = oracle::to_vec(s);
  return (v.adjoint() * dense_oracle(h) * v)(0, 0).real();
}

PauliSum random_sum(int n, int terms, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, 3);
  std::normal_distribution<double> coef;
  std::vector<PauliString> out;
  for (int t = 0; t < terms; ++t) {
    std::string s;
    for (int q = 0; q < n; ++q) s += "IXYZ"[letter(rng)];
    out.push_back({coef(rng), s});
  }
  return PauliSum(n, out);
}

std::size_t count_coef(const PauliSum& h, double c) {
  return static_cast<std::size_t>(std::count_if(h.terms().begin(), h.terms().end(),
                                                [&](const PauliString& t) { return t.coefficient == c; }));
}

}  // namespace

TEST(Toric, TermCounts) {
  const auto lat = gg::build_toric_edge(2, 2);
  const PauliSum h0 = gg::toric_code_hamiltonian(lat, 0.0);
  EXPECT_EQ(h0.size(), 13u);
  EXPECT_EQ(count_coef(h0, -1.0), 13u);
  const PauliSum h1 = gg::toric_code_hamiltonian(lat, 1.0);
  EXPECT_EQ(h1.size(), 12u);
  for (const auto& t : h1.terms()) {
    EXPECT_EQ(t.coefficient, -1.0);
    EXPECT_EQ(std::count(t.letters.begin(), t.letters.end(), 'Z'), 1);
  }
  const PauliSum hm = gg::toric_code_hamiltonian(lat, 0.5);
  EXPECT_EQ(hm.size(), 25u);
  EXPECT_EQ(count_coef(hm, -0.5), 25u);
}

TEST(Toric, StabilizersMatchLattice) {
  const auto lat = gg::build_toric_edge(2, 2);
  const PauliSum h = gg::toric_code_hamiltonian(lat, 0.0);
  std::size_t stars = 0, loops = 0;
  for (const auto& t : h.terms()) {
    const auto x = std::count(t.letters.begin(), t.letters.end(), 'X');
    const auto z = std::count(t.letters.begin(), t.letters.end(), 'Z');
    if (x > 0) {
      EXPECT_EQ(z, 0);
      ++stars;
    } else {
      EXPECT_EQ(z, 4);
      ++loops;
    }
  }
  EXPECT_EQ(stars, 9u);
  EXPECT_EQ(loops, 4u);
}

TEST(Toric, StarsAndPlaquettesShareEvenEdges) {
  const auto lat = gg::build_toric_edge(3, 2);
  for (const auto& v : lat.vertices)
    for (const auto& p : lat.plaquettes) {
      int shared = 0;
      for (int e : v) shared += static_cast<int>(std::count(p.begin(), p.end(), e));
      EXPECT_TRUE(shared == 0 || shared == 2);
    }
}

TEST(Toric, StabilizersCommuteAsDenseMatrices) {
  const auto lat = gg::build_toric_edge(1, 2);  // 7 qubits
  const PauliSum h = gg::toric_code_hamiltonian(lat, 0.0);
  std::vector<oracle::Mat> ops;
  for (const auto& t : h.terms()) ops.push_back(dense_oracle(PauliSum(h.qubit_count(), {t})));
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) EXPECT_LT((ops[i] * ops[j] - ops[j] * ops[i]).norm(), 1e-12);
}

TEST(Toric, RejectsWrongLatticeOrField) {
  EXPECT_THROW(gg::toric_code_hamiltonian(gg::build_square(2, 2), 0.0), gg::ArgumentError);
  EXPECT_THROW(gg::toric_code_hamiltonian(gg::build_toric_edge(1, 1), 1.5), gg::ArgumentError);
}

TEST(Heisenberg, TermCounts) {
  const PauliSum h = gg::heisenberg_j1j2(2, 2, 0.0);
  EXPECT_EQ(h.size(), 12u);
  EXPECT_EQ(count_coef(h, 0.25), 12u);
  EXPECT_EQ(gg::heisenberg_j1j2(2, 2, 1.0).size(), 18u);
  EXPECT_EQ(gg::heisenberg_j1j2(4, 4, 0.5).size(), 3u * (24 + 18));
  EXPECT_EQ(gg::heisenberg_j1j2(4, 4, 0.0).size(), 3u * 24);
  EXPECT_THROW(gg::heisenberg_j1j2(1, 4, 0.0), gg::SizeError);
}

TEST(Heisenberg, TwoSiteSingletEnergy) {
  // One bond of S.S has singlet energy -3/4; the 2x2 square's four bonds
  // with J2 = 0 have ground energy -2 (ring of four spins 1/2).
  const auto e = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(dense_oracle(gg::heisenberg_j1j2(2, 2, 0.0)))
                     .eigenvalues()
                     .minCoeff();
  EXPECT_NEAR(e, -2.0, 1e-12);
}

TEST(ZProbe, Values) {
  const PauliSum z = gg::z_probe(2, 1);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z.terms()[0].letters, "IZ");
  EXPECT_EQ(z.expectation(gg::StateVector::zero(2)), 1.0);
  gg::StateVector s = gg::StateVector::zero(3);
  gg::apply_one_qubit(s, 2, gg::ry(std::numbers::pi / 2));
  EXPECT_NEAR(gg::z_probe(3, 2).expectation(s), 0.0, 1e-15);
  EXPECT_THROW(gg::z_probe(3, 3), gg::IndexError);
}

TEST(Expectation, SimpleValues) {
  std::vector<PauliString> zs;
  for (int q = 0; q < 12; ++q) {
    std::string l(12, 'I');
    l[q] = 'Z';
    zs.push_back({1.0, l});
  }
  EXPECT_EQ(PauliSum(12, zs).expectation(gg::StateVector::zero(12)), 12.0);
  const auto h1 = gg::toric_code_hamiltonian(gg::build_toric_edge(2, 2), 1.0);
  EXPECT_EQ(h1.expectation(gg::StateVector::zero(12)), -12.0);
}

TEST(Expectation, MatchesDenseOracle) {
  const int n = 8;
  for (unsigned seed = 0; seed < 4; ++seed) {
    const PauliSum h = random_sum(n, 30, seed);
    const gg::StateVector s = oracle::random_state(n, 50 + seed);
    EXPECT_NEAR(h.expectation(s), dense_expectation(h, s), 1e-10);
  }
  const auto lat = gg::build_toric_edge(1, 2);
  const PauliSum t = gg::toric_code_hamiltonian(lat, 0.3);
  const gg::StateVector s = oracle::random_state(lat.n_sites, 5);
  EXPECT_NEAR(t.expectation(s), dense_expectation(t, s), 1e-10);
}

TEST(Apply, MatchesDenseOracle) {
  const int n = 6;
  const PauliSum h = random_sum(n, 20, 77);
  const gg::StateVector s = oracle::random_state(n, 78);
  const oracle::Vec want = dense_oracle(h) * oracle::to_vec(s);
  EXPECT_LT((oracle::to_vec(h.apply(s)) - want).norm(), 1e-12);
  EXPECT_LT((gg::dense_matrix(h) - dense_oracle(h)).norm(), 1e-12);
}

TEST(Expectation, RejectsMismatchedQubits) {
  EXPECT_THROW(gg::z_probe(3, 0).expectation(gg::StateVector::zero(2)), gg::ShapeError);
}

TEST(PauliSumCtor, RejectsBadTerms) {
  EXPECT_THROW(PauliSum(2, {{1.0, "XYZ"}}), gg::ShapeError);
  EXPECT_THROW(PauliSum(2, {{1.0, "XQ"}}), gg::ValidationError);
  EXPECT_THROW(PauliSum(2, {{std::nan(""), "XX"}}), gg::ValidationError);
}

TEST(Properties, LinearAndOrderInvariant) {
  const int n = 7;
  const PauliSum a = random_sum(n, 15, 1);
  const PauliSum b = random_sum(n, 15, 2);
  std::vector<PauliString> both = a.terms();
  both.insert(both.end(), b.terms().begin(), b.terms().end());
  const gg::StateVector s = oracle::random_state(n, 3);
  EXPECT_NEAR(PauliSum(n, both).expectation(s), a.expectation(s) + b.expectation(s), 1e-12);

  std::vector<PauliString> scaled = a.terms();
  for (auto& t : scaled) t.coefficient *= -2.5;
  EXPECT_NEAR(PauliSum(n, scaled).expectation(s), -2.5 * a.expectation(s), 1e-12);

  std::mt19937_64 rng(9);
  std::shuffle(both.begin(), both.end(), rng);
  EXPECT_NEAR(PauliSum(n, both).expectation(s), a.expectation(s) + b.expectation(s), 1e-12);
}

TEST(Json, ExportsTerms) {
  const auto j = gg::to_json(gg::heisenberg_j1j2(2, 2, 0.0));
  EXPECT_EQ(j.at("terms").size(), 12u);
}
