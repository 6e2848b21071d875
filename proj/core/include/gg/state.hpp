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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gg {

using Complex = std::complex<double>;

// Row-major 2x2 and 4x4 complex matrices.
using Matrix2 = std::array<Complex, 4>;
using Matrix4 = std::array<Complex, 16>;

inline constexpr int kMaxQubits = 24;

/// Dense pure state over N qubits.
///
/// Bit q of a basis index is the computational value of qubit q, so qubit 0
/// is the least significant bit. The amplitude vector always has exactly
/// 2^N entries.
class StateVector {
 public:
  /// |0...0> on n qubits; throws SizeError unless 1 <= n <= kMaxQubits.
  static StateVector zero(int n);
  /// Computational basis state |index>.
  static StateVector basis(int n, std::uint64_t index);
  /// Adopts an amplitude array whose length must be a power of two >= 2.
  /// The array is not renormalized.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  int qubit_count() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  std::span<Complex> amplitudes() noexcept { return amps_; }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex& operator[](std::size_t i) noexcept { return amps_[i]; }
  const Complex& operator[](std::size_t i) const noexcept { return amps_[i]; }

  double norm() const noexcept;
  void normalize();

 private:
  StateVector(int qubits, std::vector<Complex> amps) : qubits_(qubits), amps_(std::move(amps)) {}

  int qubits_ = 0;
  std::vector<Complex> amps_;
};

// ---------------------------------------------------------------------------
// Standard single- and two-qubit matrices. Rotations follow R_P(t) = exp(-i t P / 2).

Matrix2 identity2();
Matrix2 hadamard();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
Matrix2 rx(double theta);
Matrix2 ry(double theta);
Matrix2 rz(double theta);

Matrix4 identity4();
Matrix4 swap_gate();
/// exp(-i theta XX / 2); likewise for YY and ZZ.
Matrix4 rxx(double theta);
Matrix4 ryy(double theta);
Matrix4 rzz(double theta);

bool is_unitary(const Matrix2& u, double tol = 1e-10);
bool is_unitary(const Matrix4& u, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Checked gate application. All of these mutate the state in place and
// validate their arguments; the circuit executor uses the unchecked kernels
// in namespace kernel.

void apply_one_qubit(StateVector& state, int q, const Matrix2& u);

/// Multiplies every amplitude with bits q1 and q2 set by e^{i theta}.
void apply_cz_theta(StateVector& state, int q1, int q2, double theta);

/// exp(i theta |1><1|_control (x) |-><-|_target): the Hadamard conjugate of
/// apply_cz_theta on the target qubit.
void apply_cx_theta(StateVector& state, int control, int target, double theta);

/// Applies u to the pair; within u's basis, q1 is the more significant bit.
void apply_two_qubit(StateVector& state, int q1, int q2, const Matrix4& u);

/// <a|b>; throws ShapeError when the qubit counts differ.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

namespace kernel {

void one_qubit(std::span<Complex> amps, int q, const Matrix2& u) noexcept;
void cz_phase(std::span<Complex> amps, int q1, int q2, Complex phase) noexcept;
/// Applies I + (phase - 1) |1><1|_c (x) |-><-|_t.
void cx_phase(std::span<Complex> amps, int control, int target, Complex phase) noexcept;
void two_qubit(std::span<Complex> amps, int q1, int q2, const Matrix4& u) noexcept;
/// exp(-i theta P P / 2) for P in {X, Y, Z} on the pair.
void rpp(std::span<Complex> amps, int q1, int q2, char pauli, double theta) noexcept;

}  // namespace kernel

}  // namespace gg
