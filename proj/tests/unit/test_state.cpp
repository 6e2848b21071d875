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
#include <numbers>

#include <gtest/gtest.h>

#include "gg/error.hpp"
#include "gg/state.hpp"
#include "oracles.hpp"

using gg::Complex;
using gg::StateVector;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector plus_plus() {
  return StateVector::from_amplitudes({0.5, 0.5, 0.5, 0.5});
}

gg::Matrix2 to_m2(const oracle::Mat& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

}  // namespace

TEST(ZeroState, HasSingleUnitAmplitude) {
  for (int n : {1, 2, 12}) {
    const StateVector s = StateVector::zero(n);
    ASSERT_EQ(s.dimension(), std::size_t{1} << n);
    EXPECT_EQ(s[0], Complex(1.0));
    for (std::size_t i = 1; i < s.dimension(); ++i) EXPECT_EQ(s[i], Complex(0.0));
  }
}

TEST(ZeroState, RejectsOutOfRangeSizes) {
  EXPECT_THROW(StateVector::zero(0), gg::SizeError);
  EXPECT_THROW(StateVector::zero(25), gg::SizeError);
}

TEST(ZeroState, RejectsNonPowerOfTwoAmplitudes) {
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), gg::Error);
}

TEST(OneQubit, IdentityLeavesStateUnchanged) {
  StateVector s = oracle::random_state(3, 1);
  const StateVector before = s;
  gg::apply_one_qubit(s, 1, gg::identity2());
  EXPECT_LT(oracle::max_diff(s, before), 1e-15);
}

TEST(OneQubit, RyHalfPiMakesPlus) {
  StateVector s = StateVector::zero(1);
  gg::apply_one_qubit(s, 0, gg::ry(kPi / 2));
  EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(s[0].imag()) + std::abs(s[1].imag()), 0.0, 1e-15);
}

TEST(OneQubit, RzOnZeroOnlyChangesPhase) {
  StateVector s = StateVector::zero(1);
  gg::apply_one_qubit(s, 0, gg::rz(0.83));
  EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-15);
  EXPECT_EQ(s[1], Complex(0.0));
}

TEST(OneQubit, MatchesKroneckerOracle) {
  const int n = 4;
  const StateVector s0 = oracle::random_state(n, 7);
  for (int q = 0; q < n; ++q) {
    const oracle::Mat u = oracle::rot(oracle::Y(), 0.4 + q) * oracle::rot(oracle::Z(), 1.3 * q);
    StateVector s = s0;
    gg::apply_one_qubit(s, q, to_m2(u));
    const oracle::Vec want = oracle::embed1(n, q, u) * oracle::to_vec(s0);
    EXPECT_LT((oracle::to_vec(s) - want).norm(), 1e-13) << "qubit " << q;
  }
}

TEST(OneQubit, RejectsBadArguments) {
  StateVector s = StateVector::zero(2);
  EXPECT_THROW(gg::apply_one_qubit(s, 2, gg::hadamard()), gg::IndexError);
  EXPECT_THROW(gg::apply_one_qubit(s, -1, gg::hadamard()), gg::IndexError);
  EXPECT_THROW(gg::apply_one_qubit(s, 0, {2.0, 0.0, 0.0, 1.0}), gg::ValidationError);
}

TEST(Rotations, MatchMatrixExponentials) {
  for (double t : {0.0, 0.3, -1.7, 2 * kPi}) {
    const auto ry = gg::ry(t);
    const auto want_y = oracle::rot(oracle::Y(), t);
    const auto rz = gg::rz(t);
    const auto want_z = oracle::rot(oracle::Z(), t);
    const auto rx = gg::rx(t);
    const auto want_x = oracle::rot(oracle::X(), t);
    for (int i = 0; i < 4; ++i) {
      EXPECT_LT(std::abs(ry[i] - want_y(i / 2, i % 2)), 1e-15);
      EXPECT_LT(std::abs(rz[i] - want_z(i / 2, i % 2)), 1e-15);
      EXPECT_LT(std::abs(rx[i] - want_x(i / 2, i % 2)), 1e-15);
    }
  }
}

TEST(ControlledZ, ZeroAngleIsIdentity) {
  StateVector s = oracle::random_state(3, 2);
  const StateVector before = s;
  gg::apply_cz_theta(s, 0, 2, 0.0);
  EXPECT_LT(oracle::max_diff(s, before), 1e-15);
}

TEST(ControlledZ, PiIsStandardCz) {
  StateVector s = StateVector::basis(2, 3);
  gg::apply_cz_theta(s, 0, 1, kPi);
  EXPECT_NEAR(s[3].real(), -1.0, 1e-15);
  EXPECT_NEAR(s[3].imag(), 0.0, 1e-15);
}

TEST(ControlledZ, HalfPiOnPlusPlus) {
  StateVector s = plus_plus();
  gg::apply_cz_theta(s, 0, 1, kPi / 2);
  EXPECT_NEAR(std::abs(s[3] - Complex(0, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(gg::fidelity(s, plus_plus()), 10.0 / 16.0, 1e-15);
}

TEST(ControlledZ, MatchesOracleAndIsSymmetric) {
  const int n = 4;
  const StateVector s0 = oracle::random_state(n, 3);
  StateVector a = s0, b = s0;
  gg::apply_cz_theta(a, 1, 3, 0.9);
  gg::apply_cz_theta(b, 3, 1, 0.9);
  EXPECT_LT(oracle::max_diff(a, b), 1e-15);
  const oracle::Vec want = oracle::cz(n, 1, 3, 0.9) * oracle::to_vec(s0);
  EXPECT_LT((oracle::to_vec(a) - want).norm(), 1e-13);
}

TEST(ControlledZ, RejectsEqualQubits) {
  StateVector s = StateVector::zero(2);
  EXPECT_THROW(gg::apply_cz_theta(s, 1, 1, 0.1), gg::IndexError);
}

TEST(ControlledX, PiFlipsTargetWhenControlSet) {
  // |10> in (control, target) notation: control qubit 1 set, target qubit 0 clear.
  StateVector s = StateVector::basis(2, 0b10);
  gg::apply_cx_theta(s, 1, 0, kPi);
  EXPECT_NEAR(std::abs(s[0b11]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s[0b10]), 0.0, 1e-15);
}

TEST(ControlledX, ControlZeroLeavesStateUnchanged) {
  StateVector s = StateVector::from_amplitudes({0.6, Complex(0, 0.8), 0.0, 0.0});
  const StateVector before = s;
  gg::apply_cx_theta(s, 1, 0, 1.234);
  EXPECT_LT(oracle::max_diff(s, before), 1e-15);
}

TEST(ControlledX, EqualsHadamardConjugatedCz) {
  const int n = 4;
  for (double t : {0.0, 0.7, kPi, -2.1}) {
    const StateVector s0 = oracle::random_state(n, 11);
    StateVector a = s0, b = s0;
    gg::apply_cx_theta(a, 2, 0, t);
    gg::apply_one_qubit(b, 0, gg::hadamard());
    gg::apply_cz_theta(b, 2, 0, t);
    gg::apply_one_qubit(b, 0, gg::hadamard());
    EXPECT_LT(oracle::max_diff(a, b), 1e-12);
    const oracle::Vec want = oracle::cx(n, 2, 0, t) * oracle::to_vec(s0);
    EXPECT_LT((oracle::to_vec(a) - want).norm(), 1e-13);
  }
}

TEST(TwoQubit, IdentitySwapAndRzz) {
  StateVector s = oracle::random_state(3, 5);
  const StateVector before = s;
  gg::apply_two_qubit(s, 2, 0, gg::identity4());
  EXPECT_LT(oracle::max_diff(s, before), 1e-15);

  StateVector b = StateVector::basis(2, 0b01);
  gg::apply_two_qubit(b, 1, 0, gg::swap_gate());
  EXPECT_NEAR(std::abs(b[0b10]), 1.0, 1e-15);

  StateVector z = StateVector::zero(2);
  gg::apply_two_qubit(z, 1, 0, gg::rzz(0.8));
  EXPECT_LT(std::abs(z[0] - std::exp(Complex(0, -0.4))), 1e-15);
}

TEST(TwoQubit, PairRotationsMatchOracle) {
  const int n = 3;
  const StateVector s0 = oracle::random_state(n, 9);
  struct Case {
    gg::Matrix4 u;
    oracle::Mat p;
  };
  const double t = 0.77;
  for (const auto& c : {Case{gg::rxx(t), oracle::X()}, Case{gg::ryy(t), oracle::Y()}, Case{gg::rzz(t), oracle::Z()}}) {
    StateVector s = s0;
    gg::apply_two_qubit(s, 2, 0, c.u);
    const oracle::Vec want = oracle::rpp(n, 2, 0, c.p, t) * oracle::to_vec(s0);
    EXPECT_LT((oracle::to_vec(s) - want).norm(), 1e-13);
  }
}

TEST(TwoQubit, RejectsBadArguments) {
  StateVector s = StateVector::zero(2);
  EXPECT_THROW(gg::apply_two_qubit(s, 0, 0, gg::identity4()), gg::IndexError);
  gg::Matrix4 bad = gg::identity4();
  bad[0] = 2.0;
  EXPECT_THROW(gg::apply_two_qubit(s, 0, 1, bad), gg::ValidationError);
}

TEST(InnerProduct, BasicValues) {
  const StateVector psi = oracle::random_state(4, 4);
  EXPECT_NEAR(std::abs(gg::inner_product(psi, psi) - 1.0), 0.0, 1e-14);
  EXPECT_EQ(gg::inner_product(StateVector::basis(2, 0), StateVector::basis(2, 3)), Complex(0.0));
  StateVector r = StateVector::zero(1);
  gg::apply_one_qubit(r, 0, gg::ry(kPi / 2));
  EXPECT_NEAR(std::abs(gg::inner_product(StateVector::zero(1), r) - 1 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_THROW(gg::inner_product(StateVector::zero(1), StateVector::zero(2)), gg::ShapeError);
}

TEST(Properties, NormPreservedUnderLongGateSequences) {
  const int n = 6;
  StateVector s = StateVector::zero(n);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  std::uniform_int_distribution<int> q(0, n - 1);
  for (int step = 0; step < 400; ++step) {
    const int a = q(rng);
    int b = q(rng);
    while (b == a) b = q(rng);
    switch (step % 5) {
      case 0: gg::apply_one_qubit(s, a, gg::ry(u(rng))); break;
      case 1: gg::apply_one_qubit(s, a, gg::rz(u(rng))); break;
      case 2: gg::apply_cz_theta(s, a, b, u(rng)); break;
      case 3: gg::apply_cx_theta(s, a, b, u(rng)); break;
      default: gg::apply_two_qubit(s, a, b, gg::ryy(u(rng))); break;
    }
  }
  EXPECT_NEAR(s.norm(), 1.0, 1e-10);
}

TEST(Properties, CzLayerOrderDoesNotMatter) {
  const int n = 6;
  const StateVector s0 = oracle::random_state(n, 23);
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  const std::vector<double> angles{0.1, 0.9, -1.3, 2.2, 0.4, -0.6};
  StateVector fwd = s0, rev = s0;
  for (std::size_t i = 0; i < pairs.size(); ++i) gg::apply_cz_theta(fwd, pairs[i].first, pairs[i].second, angles[i]);
  for (std::size_t i = pairs.size(); i-- > 0;) gg::apply_cz_theta(rev, pairs[i].first, pairs[i].second, angles[i]);
  EXPECT_LT(oracle::max_diff(fwd, rev), 1e-12);
}

TEST(Properties, CxOnDisjointPairsCommutes) {
  const int n = 6;
  const StateVector s0 = oracle::random_state(n, 29);
  StateVector a = s0, b = s0;
  gg::apply_cx_theta(a, 0, 1, 0.7);
  gg::apply_cx_theta(a, 2, 3, -1.1);
  gg::apply_cx_theta(a, 4, 5, 2.5);
  gg::apply_cx_theta(b, 4, 5, 2.5);
  gg::apply_cx_theta(b, 0, 1, 0.7);
  gg::apply_cx_theta(b, 2, 3, -1.1);
  EXPECT_LT(oracle::max_diff(a, b), 1e-12);
}
