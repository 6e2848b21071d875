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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "gg/lattice.hpp"
#include "gg/state.hpp"

namespace gg {

/// Real-weighted Pauli product. letters[q] acts on qubit q.
struct PauliString {
  double coefficient = 0.0;
  std::string letters;
  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Hermitian operator sum_t c_t P_t over a fixed qubit count.
class PauliSum {
 public:
  PauliSum() = default;
  PauliSum(int qubits, std::vector<PauliString> terms);

  int qubit_count() const noexcept { return qubits_; }
  const std::vector<PauliString>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// True when every term has an even number of Y letters (real matrix).
  bool is_real() const noexcept;

  /// out = H in. `out` must have the same dimension as `in` and not alias it.
  void apply(std::span<const Complex> in, std::span<Complex> out) const;
  StateVector apply(const StateVector& in) const;

  /// <psi|H|psi>. Throws ShapeError on qubit mismatch and NumericalError if
  /// the imaginary part exceeds 1e-9.
  double expectation(const StateVector& psi) const;

 private:
  struct Packed {
    double coefficient;
    std::uint64_t flip;   // X or Y
    std::uint64_t phase;  // Z or Y
    int y_count;
  };

  int qubits_ = 0;
  std::vector<PauliString> terms_;
  std::vector<Packed> packed_;
};

inline double expectation(const StateVector& psi, const PauliSum& h) { return h.expectation(psi); }

/// H = -(1-h)[sum_v A_v + sum_p B_p] - h sum_j Z_j with A_v the X-star on the
/// edges incident to vertex v and B_p the Z-loop around plaquette p. Terms
/// whose coefficient vanishes are omitted, so 0 < h < 1 yields V + P + N
/// terms, h = 0 yields V + P and h = 1 yields N.
PauliSum toric_code_hamiltonian(const Lattice& lattice, double h);

/// J1-J2 Heisenberg model on an open rows x cols square lattice with
/// S = sigma / 2: every bond adds (XX + YY + ZZ) / 4 times its coupling.
/// Nearest-neighbour bonds follow build_square's link order, then each
/// plaquette's two diagonals (omitted when j2 == 0).
PauliSum heisenberg_j1j2(int rows, int cols, double j2);

/// Single Z on `site`, coefficient 1.
PauliSum z_probe(int n, int site);

/// Dense matrix in the computational basis; limited to 14 qubits.
Eigen::MatrixXcd dense_matrix(const PauliSum& h);

nlohmann::json to_json(const PauliSum& h);

}  // namespace gg
