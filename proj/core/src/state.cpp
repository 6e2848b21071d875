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

#include "gg/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gg/error.hpp"

namespace gg {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_qubit(const StateVector& s, int q) {
  if (q < 0 || q >= s.qubit_count()) {
    throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                     std::to_string(s.qubit_count()) + "-qubit state");
  }
}

void check_pair(const StateVector& s, int a, int b) {
  check_qubit(s, a);
  check_qubit(s, b);
  if (a == b) throw IndexError("two-qubit gate needs distinct qubits, got " + std::to_string(a) + " twice");
}

template <std::size_t N>
bool is_unitary_impl(const std::array<Complex, N * N>& u, double tol) {
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < N; ++k) acc += std::conj(u[k * N + i]) * u[k * N + j];
      const Complex expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(acc - expected) > tol) return false;
    }
  }
  return true;
}

// Spreads the bits of k over the positions not in {lo, hi} (lo < hi).
inline std::size_t insert_two_zeros(std::size_t k, int lo, int hi) noexcept {
  const std::size_t lo_mask = (std::size_t{1} << lo) - 1;
  k = ((k & ~lo_mask) << 1) | (k & lo_mask);
  const std::size_t hi_mask = (std::size_t{1} << hi) - 1;
  return ((k & ~hi_mask) << 1) | (k & hi_mask);
}

}  // namespace

StateVector StateVector::zero(int n) { return basis(n, 0); }

StateVector StateVector::basis(int n, std::uint64_t index) {
  if (n < 1 || n > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n;
  if (index >= dim) throw IndexError("basis index " + std::to_string(index) + " out of range");
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw ShapeError("amplitude count " + std::to_string(dim) + " is not a power of two >= 2");
  }
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if (n > kMaxQubits) throw SizeError("state exceeds " + std::to_string(kMaxQubits) + " qubits");
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const noexcept {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  const double n = norm();
  if (!(n > 0.0)) throw NumericalError("cannot normalize a zero vector");
  for (auto& a : amps_) a /= n;
}

// --- matrices --------------------------------------------------------------

Matrix2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

Matrix2 hadamard() {
  const double s = std::numbers::sqrt2 / 2.0;
  return {s, s, s, -s};
}

Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 pauli_y() { return {0.0, -kI, kI, 0.0}; }
Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Matrix2 rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {c, -kI * s, -kI * s, c};
}

Matrix2 ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {c, -s, s, c};
}

Matrix2 rz(double theta) {
  return {std::polar(1.0, -theta / 2), 0.0, 0.0, std::polar(1.0, theta / 2)};
}

Matrix4 identity4() {
  Matrix4 m{};
  for (int i = 0; i < 4; ++i) m[i * 4 + i] = 1.0;
  return m;
}

Matrix4 swap_gate() {
  Matrix4 m{};
  m[0] = m[15] = 1.0;
  m[1 * 4 + 2] = m[2 * 4 + 1] = 1.0;
  return m;
}

namespace {

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m{};
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2) m[(2 * r1 + r2) * 4 + (2 * c1 + c2)] = a[r1 * 2 + c1] * b[r2 * 2 + c2];
  return m;
}

Matrix4 pauli_pair_rotation(const Matrix2& p, double theta) {
  const Matrix4 pp = kron(p, p);
  const Matrix4 id = identity4();
  Matrix4 m{};
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  for (int i = 0; i < 16; ++i) m[i] = c * id[i] - kI * s * pp[i];
  return m;
}

}  // namespace

Matrix4 rxx(double theta) { return pauli_pair_rotation(pauli_x(), theta); }
Matrix4 ryy(double theta) { return pauli_pair_rotation(pauli_y(), theta); }
Matrix4 rzz(double theta) { return pauli_pair_rotation(pauli_z(), theta); }

bool is_unitary(const Matrix2& u, double tol) { return is_unitary_impl<2>(u, tol); }
bool is_unitary(const Matrix4& u, double tol) { return is_unitary_impl<4>(u, tol); }

// --- checked application ---------------------------------------------------

void apply_one_qubit(StateVector& state, int q, const Matrix2& u) {
  check_qubit(state, q);
  if (!is_unitary(u)) throw ValidationError("single-qubit matrix is not unitary within 1e-10");
  kernel::one_qubit(state.amplitudes(), q, u);
}

void apply_cz_theta(StateVector& state, int q1, int q2, double theta) {
  check_pair(state, q1, q2);
  kernel::cz_phase(state.amplitudes(), q1, q2, std::polar(1.0, theta));
}

void apply_cx_theta(StateVector& state, int control, int target, double theta) {
  check_pair(state, control, target);
  kernel::cx_phase(state.amplitudes(), control, target, std::polar(1.0, theta));
}

void apply_two_qubit(StateVector& state, int q1, int q2, const Matrix4& u) {
  check_pair(state, q1, q2);
  if (!is_unitary(u)) throw ValidationError("two-qubit matrix is not unitary within 1e-10");
  kernel::two_qubit(state.amplitudes(), q1, q2, u);
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw ShapeError("inner product of " + std::to_string(a.qubit_count()) + "- and " +
                     std::to_string(b.qubit_count()) + "-qubit states");
  }
  Complex acc = 0.0;
  const auto x = a.amplitudes();
  const auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

// --- kernels ---------------------------------------------------------------

namespace kernel {

void one_qubit(std::span<Complex> amps, int q, const Matrix2& u) noexcept {
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps.size();
  const Complex u00 = u[0], u01 = u[1], u10 = u[2], u11 = u[3];
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t j = base; j < base + stride; ++j) {
      const Complex a0 = amps[j];
      const Complex a1 = amps[j + stride];
      amps[j] = u00 * a0 + u01 * a1;
      amps[j + stride] = u10 * a0 + u11 * a1;
    }
  }
}

void cz_phase(std::span<Complex> amps, int q1, int q2, Complex phase) noexcept {
  const int lo = std::min(q1, q2), hi = std::max(q1, q2);
  const std::size_t both = (std::size_t{1} << q1) | (std::size_t{1} << q2);
  const std::size_t quarter = amps.size() >> 2;
  for (std::size_t k = 0; k < quarter; ++k) amps[insert_two_zeros(k, lo, hi) | both] *= phase;
}

void cx_phase(std::span<Complex> amps, int control, int target, Complex phase) noexcept {
  const int lo = std::min(control, target), hi = std::max(control, target);
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const Complex half = (phase - 1.0) * 0.5;
  const std::size_t quarter = amps.size() >> 2;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t i0 = insert_two_zeros(k, lo, hi) | cbit;
    const std::size_t i1 = i0 | tbit;
    const Complex d = half * (amps[i0] - amps[i1]);
    amps[i0] += d;
    amps[i1] -= d;
  }
}

void two_qubit(std::span<Complex> amps, int q1, int q2, const Matrix4& u) noexcept {
  const int lo = std::min(q1, q2), hi = std::max(q1, q2);
  const std::size_t b1 = std::size_t{1} << q1;
  const std::size_t b2 = std::size_t{1} << q2;
  const std::size_t quarter = amps.size() >> 2;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t base = insert_two_zeros(k, lo, hi);
    const std::size_t idx[4] = {base, base | b2, base | b1, base | b1 | b2};
    const Complex in[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
    for (int r = 0; r < 4; ++r) {
      amps[idx[r]] = u[r * 4 + 0] * in[0] + u[r * 4 + 1] * in[1] + u[r * 4 + 2] * in[2] + u[r * 4 + 3] * in[3];
    }
  }
}

void rpp(std::span<Complex> amps, int q1, int q2, char pauli, double theta) noexcept {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const int lo = std::min(q1, q2), hi = std::max(q1, q2);
  const std::size_t b1 = std::size_t{1} << q1;
  const std::size_t b2 = std::size_t{1} << q2;
  const std::size_t quarter = amps.size() >> 2;
  if (pauli == 'Z') {
    const Complex even = std::polar(1.0, -theta / 2);  // ZZ = +1
    const Complex odd = std::polar(1.0, theta / 2);    // ZZ = -1
    for (std::size_t k = 0; k < quarter; ++k) {
      const std::size_t base = insert_two_zeros(k, lo, hi);
      amps[base] *= even;
      amps[base | b1 | b2] *= even;
      amps[base | b1] *= odd;
      amps[base | b2] *= odd;
    }
    return;
  }
  // XX|ab> = |~a~b>, YY|ab> = -(-1)^{a+b} |~a~b>; both pair 00<->11 and 01<->10.
  const Complex ms = -kI * s;
  const double same_sign = (pauli == 'Y') ? -1.0 : 1.0;  // sign on the 00<->11 pair
  const double diff_sign = 1.0;                           // sign on the 01<->10 pair
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t i00 = insert_two_zeros(k, lo, hi);
    const std::size_t i11 = i00 | b1 | b2;
    const std::size_t i01 = i00 | b2;
    const std::size_t i10 = i00 | b1;
    const Complex a00 = amps[i00], a11 = amps[i11], a01 = amps[i01], a10 = amps[i10];
    amps[i00] = c * a00 + ms * same_sign * a11;
    amps[i11] = c * a11 + ms * same_sign * a00;
    amps[i01] = c * a01 + ms * diff_sign * a10;
    amps[i10] = c * a10 + ms * diff_sign * a01;
  }
}

}  // namespace kernel
}  // namespace gg
