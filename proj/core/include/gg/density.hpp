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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gg/state.hpp"

namespace gg {

inline constexpr int kMaxReducedQubits = 14;

/// Reduced state of a subsystem. Bit j of a row/column index is the value of
/// the j-th qubit in the `kept` list handed to reduced_density_matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

  bool is_hermitian(double tol = 1e-10) const;
  Complex trace() const { return entries_.trace(); }
  /// Ascending eigenvalues; requires is_hermitian().
  Eigen::VectorXd eigenvalues() const;

 private:
  Eigen::MatrixXcd entries_;
};

/// Partial trace of |psi><psi| over every qubit not listed in `keep`.
/// `keep` must be non-empty, duplicate-free, in range and at most
/// kMaxReducedQubits long.
DensityMatrix reduced_density_matrix(const StateVector& state, std::span<const int> keep);

/// -sum lambda ln lambda over eigenvalues above 1e-12, in nats.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace gg
