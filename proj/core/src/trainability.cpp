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

#include "gg/trainability.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "gg/error.hpp"
#include "gg/lattice.hpp"
#include "gg/parallel.hpp"
#include "gg/vqe.hpp"

namespace gg {

namespace {

std::vector<double> draw_parameters(int count, std::uint64_t seed, int sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample), 0x6270u};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::vector<double> p(static_cast<std::size_t>(count));
  for (auto& x : p) x = u(rng);
  return p;
}

void check_samples(int samples) {
  if (samples < 2) throw ArgumentError("variance needs at least 2 samples");
}

}  // namespace

int resolve_mu(const MuSelector& mu, const Circuit& circuit) {
  if (mu.index) {
    if (*mu.index < 0 || *mu.index >= circuit.param_count) {
      throw ArgumentError("parameter index " + std::to_string(*mu.index) + " out of range");
    }
    return *mu.index;
  }
  const int qubit = mu.qubit < 0 ? circuit.qubits + mu.qubit : mu.qubit;
  if (mu.layer < 0 || mu.layer >= circuit.layers || qubit < 0 || qubit >= circuit.qubits) {
    throw ArgumentError("parameter selector (layer " + std::to_string(mu.layer) + ", qubit " +
                        std::to_string(mu.qubit) + ") is outside the circuit");
  }
  return r3_param_index(circuit, mu.layer, qubit, mu.slot);
}

VarianceEstimate gradient_variance(const Circuit& circuit, const PauliSum& h, int samples, std::uint64_t seed,
                                   const MuSelector& mu, int threads) {
  check_samples(samples);
  VarianceEstimate est;
  est.param_index = resolve_mu(mu, circuit);
  est.samples = samples;
  const StateVector initial = StateVector::zero(circuit.qubits);
  std::vector<double> grads(static_cast<std::size_t>(samples));
  parallel_for(grads.size(), threads, [&](std::size_t s) {
    const auto params = draw_parameters(circuit.param_count, seed, static_cast<int>(s));
    grads[s] = shift_derivative(circuit, params, h, initial, est.param_index);
  });
  double mean = 0.0;
  for (double g : grads) mean += g;
  mean /= samples;
  double ss = 0.0;
  for (double g : grads) ss += (g - mean) * (g - mean);
  est.mean = mean;
  est.variance = ss / (samples - 1);
  return est;
}

std::vector<double> all_parameter_variance(const Circuit& circuit, const PauliSum& h, int samples,
                                           std::uint64_t seed, int threads) {
  check_samples(samples);
  const StateVector initial = StateVector::zero(circuit.qubits);
  std::vector<std::vector<double>> grads(static_cast<std::size_t>(samples));
  parallel_for(grads.size(), threads, [&](std::size_t s) {
    const auto params = draw_parameters(circuit.param_count, seed, static_cast<int>(s));
    grads[s] = adjoint_gradient(circuit, params, h, initial).gradient;
  });
  const auto p = static_cast<std::size_t>(circuit.param_count);
  std::vector<double> mean(p, 0.0), var(p, 0.0);
  for (const auto& g : grads)
    for (std::size_t j = 0; j < p; ++j) mean[j] += g[j];
  for (auto& m : mean) m /= samples;
  for (const auto& g : grads)
    for (std::size_t j = 0; j < p; ++j) var[j] += (g[j] - mean[j]) * (g[j] - mean[j]);
  for (auto& v : var) v /= samples - 1;
  return var;
}

std::vector<BpRow> bp_size_sweep(AnsatzKind kind, std::span<const int> sizes, int layers, int samples,
                                 std::uint64_t seed, const MuSelector& mu, int threads) {
  std::vector<BpRow> rows;
  for (int n : sizes) {
    const Lattice chain = build_chain(n);
    const Circuit c = build_ansatz(kind, chain, layers);
    rows.push_back({n, gradient_variance(c, z_probe(n, n - 1), samples, seed, mu, threads).variance, samples});
  }
  return rows;
}

std::vector<BpRow> bp_depth_sweep(AnsatzKind kind, int qubits, std::span<const int> depths, int samples,
                                  std::uint64_t seed, const MuSelector& mu, int threads) {
  const Lattice chain = build_chain(qubits);
  const PauliSum h = z_probe(qubits, qubits - 1);
  std::vector<BpRow> rows;
  for (int k : depths) {
    const Circuit c = build_ansatz(kind, chain, k);
    rows.push_back({k, gradient_variance(c, h, samples, seed, mu, threads).variance, samples});
  }
  return rows;
}

double log_variance_slope(std::span<const BpRow> rows) {
  if (rows.size() < 2) throw ArgumentError("slope needs at least two rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(rows.size());
  for (const auto& r : rows) {
    if (!(r.variance > 0.0)) throw NumericalError("log-variance slope needs positive variances");
    const double x = r.axis_value, y = std::log(r.variance);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw ArgumentError("slope needs distinct axis values");
  return (n * sxy - sx * sy) / den;
}

}  // namespace gg
