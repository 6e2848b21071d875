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
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gg/circuit.hpp"
#include "gg/pauli.hpp"
#include "gg/problem.hpp"
#include "gg/state.hpp"

namespace gg {

// --- objective and gradients ------------------------------------------------

/// <psi(theta)|H|psi(theta)> with psi(theta) = U(theta) initial.
double evaluate(const Circuit& circuit, std::span<const double> params, const PauliSum& h,
                const StateVector& initial);

/// U(theta) initial.
StateVector prepare(const Circuit& circuit, std::span<const double> params, const StateVector& initial);

/// Two-term parameter-shift derivative for one parameter:
/// [E(theta_j + pi/2) - E(theta_j - pi/2)] / 2. Exact for every gate kind in
/// this toolkit because each generator has two eigenvalues a unit apart.
double shift_derivative(const Circuit& circuit, std::span<const double> params, const PauliSum& h,
                        const StateVector& initial, int index);

/// Full parameter-shift gradient (2 * param_count circuit evaluations).
std::vector<double> gradient(const Circuit& circuit, std::span<const double> params, const PauliSum& h,
                             const StateVector& initial);

struct EnergyAndGradient {
  double energy = 0.0;
  std::vector<double> gradient;
  StateVector state = StateVector::zero(1);  // U(theta) initial
};

/// Reverse-mode (adjoint) evaluation of the same gradient the shift rule
/// gives, at the cost of roughly three circuit passes.
EnergyAndGradient adjoint_gradient(const Circuit& circuit, std::span<const double> params, const PauliSum& h,
                                   const StateVector& initial);

// --- optimizer --------------------------------------------------------------

struct AdamConfig {
  double step_size = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  friend bool operator==(const AdamConfig&, const AdamConfig&) = default;
};

class Adam {
 public:
  Adam(AdamConfig config, std::size_t size);
  /// One bias-corrected descent step. Returns false (leaving params
  /// untouched) when the update would be non-finite.
  bool step(std::span<double> params, std::span<const double> grad);
  int steps_taken() const noexcept { return t_; }

 private:
  AdamConfig config_;
  std::vector<double> m_, v_;
  int t_ = 0;
};

// --- training ---------------------------------------------------------------

enum class GradientMethod { adjoint, shift };

std::string_view to_string(GradientMethod m);
GradientMethod parse_gradient_method(std::string_view name);

struct TrainConfig {
  LatticeSpec lattice{LatticeKind::toric_edge, 2, 2};
  AnsatzSpec ansatz{AnsatzKind::gzx, Connectivity::neighbor, 4};
  ModelSpec model{};
  int max_epochs = 1000;
  double early_stop_delta = 1e-4;
  int instances = 100;
  AdamConfig adam{};
  double init_low = 0.0;
  double init_high = 2.0 * std::numbers::pi;
  /// Epochs between topological-entropy samples; 0 disables monitoring.
  int order_param_interval = 25;
  std::optional<RegionSpec> regions;
  std::uint64_t seed = 0;
  GradientMethod gradient = GradientMethod::adjoint;
  /// Worker threads for instance-level parallelism; 0 = hardware concurrency.
  int threads = 0;
};

/// Throws ArgumentError when a field is out of range.
void validate(const TrainConfig& config);

struct RunRecord {
  int instance = 0;
  std::uint64_t seed = 0;
  std::vector<double> energies;  // E(theta_t) for t = 0, 1, ...
  std::vector<double> final_params;
  bool converged = false;  // early stop fired
  std::vector<std::pair<int, double>> gamma_samples;
  double wall_time = 0.0;  // seconds
  std::string diagnostic;

  double final_energy() const { return energies.back(); }
};

/// Parameters drawn i.i.d. uniform on [low, high) from mt19937_64(seed).
std::vector<double> initial_parameters(int count, std::uint64_t seed, double low, double high);

/// Trains one instance with seed config.seed + instance. The problem must
/// match the config (see build_problem).
RunRecord train_instance(const Problem& problem, const TrainConfig& config, int instance);

struct AggregateReport {
  int instance_count = 0;
  int converged_count = 0;
  /// True when nothing converged and the aggregates use every run instead.
  bool used_fallback = false;
  /// Mean final energy over the lowest ceil(n/2) converged runs.
  double best_half_mean_energy = 0.0;
  std::optional<double> best_half_mean_gamma;
  std::vector<int> best_half_instances;
  int best_instance = 0;
  double best_energy = 0.0;
  /// Median over the runs still active at each epoch.
  std::vector<double> median_curve;
};

AggregateReport aggregate(std::span<const RunRecord> runs);

struct EnsembleResult {
  std::vector<RunRecord> runs;
  AggregateReport report;
};

using ProgressCallback = std::function<void(const RunRecord&)>;

/// Runs config.instances independent instances on a bounded worker pool.
/// Results are ordered by instance id and independent of the schedule.
EnsembleResult train_ensemble(const TrainConfig& config, const ProgressCallback& progress = {});

Problem build_problem(const TrainConfig& config);

/// Median of the values (mean of the two middle ones for even counts).
double median(std::vector<double> values);

}  // namespace gg
