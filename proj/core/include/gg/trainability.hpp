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
#include <optional>
#include <span>
#include <vector>

#include "gg/circuit.hpp"
#include "gg/pauli.hpp"

namespace gg {

/// Which parameter a gradient-variance scan differentiates. Either an R3
/// rotation (layer, qubit, slot; qubit -1 means the last qubit) or a raw
/// parameter index.
struct MuSelector {
  int layer = 0;
  int qubit = -1;
  R3Slot slot = R3Slot::ry;
  std::optional<int> index;
};

/// Resolves the selector against a circuit. Throws ArgumentError when it
/// points outside the circuit.
int resolve_mu(const MuSelector& mu, const Circuit& circuit);

struct VarianceEstimate {
  int param_index = 0;
  int samples = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
};

/// Var over uniform [0, 2pi) parameter draws of the parameter-shift
/// derivative of <H> w.r.t. parameter mu. Sample s uses its own RNG stream
/// derived from (seed, s).
VarianceEstimate gradient_variance(const Circuit& circuit, const PauliSum& h, int samples, std::uint64_t seed,
                                   const MuSelector& mu = {}, int threads = 1);

/// Per-parameter variances from adjoint gradients (one entry per parameter).
std::vector<double> all_parameter_variance(const Circuit& circuit, const PauliSum& h, int samples,
                                           std::uint64_t seed, int threads = 1);

struct BpRow {
  int axis_value = 0;  // N for size sweeps, k for depth sweeps
  double variance = 0.0;
  int samples = 0;
};

/// Chains of each size with the given depth, H = Z on the last qubit.
std::vector<BpRow> bp_size_sweep(AnsatzKind kind, std::span<const int> sizes, int layers, int samples,
                                 std::uint64_t seed, const MuSelector& mu = {}, int threads = 1);

/// A chain of `qubits` sites at each depth, H = Z on the last qubit.
std::vector<BpRow> bp_depth_sweep(AnsatzKind kind, int qubits, std::span<const int> depths, int samples,
                                  std::uint64_t seed, const MuSelector& mu = {}, int threads = 1);

/// Least-squares slope of ln(variance) against the axis value.
double log_variance_slope(std::span<const BpRow> rows);

}  // namespace gg
