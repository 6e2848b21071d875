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

#include "gg/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gg/error.hpp"

namespace gg {

namespace {
constexpr double kEigenFloor = 1e-12;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw ShapeError("density matrix must be square and non-empty");
  }
}

bool DensityMatrix::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("density-matrix eigensolver failed");
  return solver.eigenvalues();
}

DensityMatrix reduced_density_matrix(const StateVector& state, std::span<const int> keep) {
  const int n = state.qubit_count();
  if (keep.empty()) throw ArgumentError("reduced density matrix needs at least one kept qubit");
  if (static_cast<int>(keep.size()) > kMaxReducedQubits) {
    throw ArgumentError("cannot keep more than " + std::to_string(kMaxReducedQubits) + " qubits");
  }
  std::size_t keep_mask = 0;
  for (int q : keep) {
    if (q < 0 || q >= n) throw ArgumentError("kept qubit " + std::to_string(q) + " out of range");
    if (keep_mask & (std::size_t{1} << q)) throw ArgumentError("kept qubit " + std::to_string(q) + " listed twice");
    keep_mask |= std::size_t{1} << q;
  }

  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!(keep_mask & (std::size_t{1} << q))) traced.push_back(q);

  const std::size_t k = keep.size();
  const std::size_t rows = std::size_t{1} << k;
  const std::size_t cols = std::size_t{1} << traced.size();

  // psi reshaped as M[kept index, traced index]; rho = M M^dagger.
  auto scatter = [](std::size_t local, std::span<const int> qubits) {
    std::size_t global = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j)
      if (local & (std::size_t{1} << j)) global |= std::size_t{1} << qubits[j];
    return global;
  };
  std::vector<std::size_t> row_offset(rows), col_offset(cols);
  for (std::size_t r = 0; r < rows; ++r) row_offset[r] = scatter(r, keep);
  for (std::size_t c = 0; c < cols; ++c) col_offset[c] = scatter(c, traced);

  Eigen::MatrixXcd m(rows, cols);
  const auto amps = state.amplitudes();
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = amps[row_offset[r] | col_offset[c]];

  Eigen::MatrixXcd rho = m * m.adjoint();
  return DensityMatrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  if (!rho.is_hermitian()) throw ValidationError("density matrix is not Hermitian within 1e-10");
  const Eigen::VectorXd lambda = rho.eigenvalues();
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double l = lambda[i];
    if (l > kEigenFloor) s -= l * std::log(l);
  }
  return std::max(s, 0.0);
}

}  // namespace gg
