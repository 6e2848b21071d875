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

#include "gg/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "gg/error.hpp"

namespace gg {

namespace {

// i^k for k mod 4.
Complex i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline double parity_sign(std::uint64_t bits) noexcept { return (std::popcount(bits) & 1) ? -1.0 : 1.0; }

}  // namespace

PauliSum::PauliSum(int qubits, std::vector<PauliString> terms) : qubits_(qubits), terms_(std::move(terms)) {
  if (qubits < 1 || qubits > kMaxQubits) throw SizeError("Pauli sum qubit count " + std::to_string(qubits) + " out of range");
  packed_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coefficient)) throw ValidationError("Pauli coefficient is not finite");
    if (static_cast<int>(t.letters.size()) != qubits) {
      throw ShapeError("Pauli string '" + t.letters + "' does not have " + std::to_string(qubits) + " letters");
    }
    Packed p{t.coefficient, 0, 0, 0};
    for (int q = 0; q < qubits; ++q) {
      const std::uint64_t bit = std::uint64_t{1} << q;
      switch (t.letters[q]) {
        case 'I': break;
        case 'X': p.flip |= bit; break;
        case 'Z': p.phase |= bit; break;
        case 'Y':
          p.flip |= bit;
          p.phase |= bit;
          ++p.y_count;
          break;
        default: throw ValidationError("invalid Pauli letter '" + std::string(1, t.letters[q]) + "'");
      }
    }
    packed_.push_back(p);
  }
}

bool PauliSum::is_real() const noexcept {
  for (const auto& p : packed_)
    if (p.y_count % 2 != 0) return false;
  return true;
}

// P|b> = i^{#Y} (-1)^{|b & phase|} |b ^ flip>.
void PauliSum::apply(std::span<const Complex> in, std::span<Complex> out) const {
  if (in.size() != (std::size_t{1} << qubits_) || out.size() != in.size()) {
    throw ShapeError("Hamiltonian application dimension mismatch");
  }
  std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
  for (const auto& p : packed_) {
    const Complex c = p.coefficient * i_power(p.y_count);
    for (std::size_t b = 0; b < in.size(); ++b) out[b ^ p.flip] += c * parity_sign(b & p.phase) * in[b];
  }
}

StateVector PauliSum::apply(const StateVector& in) const {
  if (in.qubit_count() != qubits_) throw ShapeError("Hamiltonian and state qubit counts differ");
  auto out = StateVector::zero(qubits_);
  apply(in.amplitudes(), out.amplitudes());
  return out;
}

double PauliSum::expectation(const StateVector& psi) const {
  if (psi.qubit_count() != qubits_) {
    throw ShapeError("Hamiltonian on " + std::to_string(qubits_) + " qubits, state on " +
                     std::to_string(psi.qubit_count()));
  }
  const auto a = psi.amplitudes();
  Complex total = 0.0;
  for (const auto& p : packed_) {
    Complex acc = 0.0;
    if (p.flip == 0) {
      double diag = 0.0;
      for (std::size_t b = 0; b < a.size(); ++b) diag += parity_sign(b & p.phase) * std::norm(a[b]);
      acc = diag;
    } else {
      for (std::size_t b = 0; b < a.size(); ++b) acc += std::conj(a[b ^ p.flip]) * parity_sign(b & p.phase) * a[b];
    }
    total += p.coefficient * i_power(p.y_count) * acc;
  }
  if (std::abs(total.imag()) > 1e-9) throw NumericalError("expectation has imaginary part " + std::to_string(total.imag()));
  return total.real();
}

PauliSum toric_code_hamiltonian(const Lattice& lattice, double h) {
  if (lattice.kind != LatticeKind::toric_edge) {
    throw ArgumentError("toric code needs a toric_edge lattice, got " + std::string(to_string(lattice.kind)));
  }
  if (!(h >= 0.0 && h <= 1.0)) throw ArgumentError("field h must lie in [0, 1], got " + std::to_string(h));
  const int n = lattice.n_sites;
  std::vector<PauliString> terms;
  const double stabilizer = -(1.0 - h);
  if (stabilizer != 0.0) {
    for (const auto& star : lattice.vertices) {
      std::string letters(n, 'I');
      for (int q : star) letters[q] = 'X';
      terms.push_back({stabilizer, std::move(letters)});
    }
    for (const auto& loop : lattice.plaquettes) {
      std::string letters(n, 'I');
      for (int q : loop) letters[q] = 'Z';
      terms.push_back({stabilizer, std::move(letters)});
    }
  }
  if (h != 0.0) {
    for (int q = 0; q < n; ++q) {
      std::string letters(n, 'I');
      letters[q] = 'Z';
      terms.push_back({-h, std::move(letters)});
    }
  }
  return PauliSum(n, std::move(terms));
}

PauliSum heisenberg_j1j2(int rows, int cols, double j2) {
  const Lattice lat = build_square(rows, cols);
  const int n = lat.n_sites;
  std::vector<PauliString> terms;
  auto bond = [&](int a, int b, double coupling) {
    for (char p : {'X', 'Y', 'Z'}) {
      std::string letters(n, 'I');
      letters[a] = letters[b] = p;
      terms.push_back({coupling / 4.0, std::move(letters)});
    }
  };
  for (const Link& l : lat.links) bond(l.a, l.b, 1.0);
  if (j2 != 0.0) {
    for (const auto& p : lat.plaquettes) {
      bond(p[0], p[3], j2);  // top-left to bottom-right
      bond(p[1], p[2], j2);  // top-right to bottom-left
    }
  }
  return PauliSum(n, std::move(terms));
}

PauliSum z_probe(int n, int site) {
  if (site < 0 || site >= n) throw IndexError("probe site " + std::to_string(site) + " out of range");
  std::string letters(n, 'I');
  letters[site] = 'Z';
  return PauliSum(n, {{1.0, std::move(letters)}});
}

Eigen::MatrixXcd dense_matrix(const PauliSum& h) {
  if (h.qubit_count() > 14) throw SizeError("dense matrix limited to 14 qubits");
  const std::size_t dim = std::size_t{1} << h.qubit_count();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<Complex> in(dim), out(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::fill(in.begin(), in.end(), Complex{0.0, 0.0});
    in[col] = 1.0;
    h.apply(in, out);
    for (std::size_t row = 0; row < dim; ++row) m(row, col) = out[row];
  }
  return m;
}

nlohmann::json to_json(const PauliSum& h) {
  nlohmann::json j;
  j["qubits"] = h.qubit_count();
  j["letter_order"] = "qubit 0 first";
  auto& terms = j["terms"] = nlohmann::json::array();
  for (const auto& t : h.terms()) terms.push_back({{"coefficient", t.coefficient}, {"letters", t.letters}});
  return j;
}

}  // namespace gg
