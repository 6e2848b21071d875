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

#include "gg/pauli.hpp"
#include "gg/state.hpp"

namespace gg {

enum class EdMethod { dense, lanczos };

struct GroundState {
  double energy = 0.0;
  StateVector state = StateVector::zero(1);
  double residual = 0.0;  // ||H psi - E psi||
  int iterations = 0;     // Lanczos steps; 0 for dense
};

struct LanczosOptions {
  int max_iterations = 500;
  double eigenvalue_tol = 1e-10;
  double residual_tol = 1e-9;
  std::uint64_t seed = 12345;
  /// Cap on stored Krylov vectors, in bytes.
  std::size_t memory_budget = std::size_t{2} << 30;
};

inline constexpr int kMaxDenseQubits = 12;
inline constexpr int kMaxLanczosQubits = 20;

/// Lowest eigenpair of h. Dense diagonalization is allowed up to 12 qubits,
/// Lanczos (matrix-free, full reorthogonalization) up to 20. Throws
/// NumericalError with the residual when Lanczos exhausts its iterations.
GroundState ground_energy(const PauliSum& h, EdMethod method, const LanczosOptions& options = {});

/// ||H psi - <H> psi|| for a normalized psi.
double eigen_residual(const PauliSum& h, const StateVector& psi, double energy);

}  // namespace gg
