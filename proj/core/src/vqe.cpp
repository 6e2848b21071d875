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

#include "gg/vqe.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <string>

#include "gg/error.hpp"
#include "gg/parallel.hpp"
#include "gg/topology.hpp"

namespace gg {

namespace {

constexpr double kShift = std::numbers::pi / 2;

void check_params(const Circuit& circuit, std::span<const double> params) {
  if (static_cast<int>(params.size()) != circuit.param_count) {
    throw ShapeError("expected " + std::to_string(circuit.param_count) + " parameters, got " +
                     std::to_string(params.size()));
  }
}

inline std::size_t insert_zero(std::size_t k, int bit) noexcept {
  const std::size_t low = (std::size_t{1} << bit) - 1;
  return ((k & ~low) << 1) | (k & low);
}

inline std::size_t insert_two_zeros(std::size_t k, int a, int b) noexcept {
  return insert_zero(insert_zero(k, std::min(a, b)), std::max(a, b));
}

// <lam| G |psi> for the generator G of U(theta) = exp(-i theta G):
// RZ: Z/2, RY: Y/2, RPP: PP/2, CZ(theta): -|11><11|, CX(theta): -|1><1| (x) |-><-|.
Complex generator_overlap(const GateInstr& g, std::span<const Complex> lam, std::span<const Complex> psi) {
  const std::size_t dim = psi.size();
  Complex acc = 0.0;
  switch (g.kind) {
    case GateKind::rz: {
      const std::size_t bit = std::size_t{1} << g.q0;
      for (std::size_t k = 0; k < dim / 2; ++k) {
        const std::size_t i0 = insert_zero(k, g.q0), i1 = i0 | bit;
        acc += std::conj(lam[i0]) * psi[i0] - std::conj(lam[i1]) * psi[i1];
      }
      return 0.5 * acc;
    }
    case GateKind::ry: {
      // Y|0> = i|1>, Y|1> = -i|0>.
      const std::size_t bit = std::size_t{1} << g.q0;
      for (std::size_t k = 0; k < dim / 2; ++k) {
        const std::size_t i0 = insert_zero(k, g.q0), i1 = i0 | bit;
        acc += std::conj(lam[i1]) * psi[i0] - std::conj(lam[i0]) * psi[i1];
      }
      return 0.5 * Complex{0.0, 1.0} * acc;
    }
    case GateKind::cz: {
      const std::size_t both = (std::size_t{1} << g.q0) | (std::size_t{1} << g.q1);
      for (std::size_t k = 0; k < dim / 4; ++k) {
        const std::size_t i = insert_two_zeros(k, g.q0, g.q1) | both;
        acc += std::conj(lam[i]) * psi[i];
      }
      return -acc;
    }
    case GateKind::cx: {
      const std::size_t c = std::size_t{1} << g.q0, t = std::size_t{1} << g.q1;
      for (std::size_t k = 0; k < dim / 4; ++k) {
        const std::size_t i0 = insert_two_zeros(k, g.q0, g.q1) | c, i1 = i0 | t;
        acc += std::conj(lam[i0] - lam[i1]) * (psi[i0] - psi[i1]);
      }
      return -0.5 * acc;
    }
    case GateKind::rxx:
    case GateKind::ryy:
    case GateKind::rzz: {
      const std::size_t b0 = std::size_t{1} << g.q0, b1 = std::size_t{1} << g.q1;
      const std::size_t both = b0 | b1;
      for (std::size_t i = 0; i < dim; ++i) {
        const bool odd = ((i & b0) != 0) != ((i & b1) != 0);
        if (g.kind == GateKind::rzz) {
          acc += (odd ? -1.0 : 1.0) * std::conj(lam[i]) * psi[i];
        } else if (g.kind == GateKind::rxx) {
          acc += std::conj(lam[i]) * psi[i ^ both];
        } else {
          // (YY psi)_i = -(-1)^{parity(i)} psi_{i ^ both}
          acc += (odd ? 1.0 : -1.0) * std::conj(lam[i]) * psi[i ^ both];
        }
      }
      return 0.5 * acc;
    }
  }
  return acc;
}

bool all_finite(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

StateVector prepare(const Circuit& circuit, std::span<const double> params, const StateVector& initial) {
  StateVector psi = initial;
  run_circuit(circuit, params, psi);
  return psi;
}

double evaluate(const Circuit& circuit, std::span<const double> params, const PauliSum& h,
                const StateVector& initial) {
  check_params(circuit, params);
  return h.expectation(prepare(circuit, params, initial));
}

double shift_derivative(const Circuit& circuit, std::span<const double> params, const PauliSum& h,
                        const StateVector& initial, int index) {
  check_params(circuit, params);
  if (index < 0 || index >= circuit.param_count) throw ArgumentError("parameter index " + std::to_string(index) + " out of range");
  std::vector<double> shifted(params.begin(), params.end());
  shifted[index] = params[index] + kShift;
  const double plus = evaluate(circuit, shifted, h, initial);
  shifted[index] = params[index] - kShift;
  const double minus = evaluate(circuit, shifted, h, initial);
  return 0.5 * (plus - minus);
}

std::vector<double> gradient(const Circuit& circuit, std::span<const double> params, const PauliSum& h,
                             const StateVector& initial) {
  check_params(circuit, params);
  std::vector<double> grad(params.size());
  for (int j = 0; j < circuit.param_count; ++j) grad[j] = shift_derivative(circuit, params, h, initial, j);
  return grad;
}

EnergyAndGradient adjoint_gradient(const Circuit& circuit, std::span<const double> params, const PauliSum& h,
                                   const StateVector& initial) {
  check_params(circuit, params);
  if (h.qubit_count() != circuit.qubits) throw ShapeError("Hamiltonian and circuit qubit counts differ");
  EnergyAndGradient out;
  out.state = prepare(circuit, params, initial);
  StateVector psi = out.state;
  StateVector lam = h.apply(psi);
  Complex e = inner_product(psi, lam);
  out.energy = e.real();
  out.gradient.assign(params.size(), 0.0);

  auto psi_amps = psi.amplitudes();
  auto lam_amps = lam.amplitudes();
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    const GateInstr& g = *it;
    const double theta = params[g.param];
    out.gradient[g.param] = 2.0 * generator_overlap(g, lam_amps, psi_amps).imag();
    apply_gate_inverse(g, theta, psi_amps);
    apply_gate_inverse(g, theta, lam_amps);
  }
  return out;
}

// --- Adam -------------------------------------------------------------------

Adam::Adam(AdamConfig config, std::size_t size) : config_(config), m_(size, 0.0), v_(size, 0.0) {}

bool Adam::step(std::span<double> params, std::span<const double> grad) {
  if (params.size() != m_.size() || grad.size() != m_.size()) throw ShapeError("Adam state size mismatch");
  const int t = t_ + 1;
  const double c1 = 1.0 - std::pow(config_.beta1, t);
  const double c2 = 1.0 - std::pow(config_.beta2, t);
  std::vector<double> m = m_, v = v_, next(params.begin(), params.end());
  for (std::size_t i = 0; i < params.size(); ++i) {
    m[i] = config_.beta1 * m[i] + (1.0 - config_.beta1) * grad[i];
    v[i] = config_.beta2 * v[i] + (1.0 - config_.beta2) * grad[i] * grad[i];
    next[i] -= config_.step_size * (m[i] / c1) / (std::sqrt(v[i] / c2) + config_.epsilon);
  }
  if (!all_finite(next) || !all_finite(m) || !all_finite(v)) return false;
  m_ = std::move(m);
  v_ = std::move(v);
  std::copy(next.begin(), next.end(), params.begin());
  t_ = t;
  return true;
}

// --- training ---------------------------------------------------------------

std::string_view to_string(GradientMethod m) { return m == GradientMethod::shift ? "shift" : "adjoint"; }

GradientMethod parse_gradient_method(std::string_view name) {
  if (name == "adjoint") return GradientMethod::adjoint;
  if (name == "shift" || name == "parameter-shift") return GradientMethod::shift;
  throw ArgumentError("unknown gradient method '" + std::string(name) + "' (expected adjoint or shift)");
}

void validate(const TrainConfig& c) {
  if (c.max_epochs < 1) throw ArgumentError("max_epochs must be >= 1");
  if (c.instances < 1) throw ArgumentError("instances must be >= 1");
  if (!(c.early_stop_delta > 0.0)) throw ArgumentError("early_stop_delta must be > 0");
  if (c.ansatz.layers < 1) throw ArgumentError("layer count k must be >= 1");
  if (c.order_param_interval < 0) throw ArgumentError("order_param_interval must be >= 0");
  if (!(c.init_high > c.init_low)) throw ArgumentError("init range must be non-empty");
  if (!(c.adam.step_size > 0.0) || !(c.adam.beta1 >= 0.0 && c.adam.beta1 < 1.0) ||
      !(c.adam.beta2 >= 0.0 && c.adam.beta2 < 1.0) || !(c.adam.epsilon > 0.0)) {
    throw ArgumentError("invalid Adam hyperparameters");
  }
}

std::vector<double> initial_parameters(int count, std::uint64_t seed, double low, double high) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(low, high);
  std::vector<double> p(count);
  for (auto& x : p) x = dist(rng);
  return p;
}

Problem build_problem(const TrainConfig& config) {
  std::optional<RegionSpec> regions = config.regions;
  if (!regions && config.order_param_interval > 0 && config.model.kind == ModelKind::toric &&
      config.lattice.kind == LatticeKind::toric_edge && config.lattice.rows >= 2 && config.lattice.cols >= 2) {
    regions = default_toric_regions(build_lattice(config.lattice));
  }
  return build_problem(config.lattice, config.ansatz, config.model, regions);
}

RunRecord train_instance(const Problem& problem, const TrainConfig& config, int instance) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const Circuit& circuit = problem.circuit;
  const PauliSum& h = problem.hamiltonian;
  const StateVector initial = StateVector::zero(circuit.qubits);
  const bool monitor = config.order_param_interval > 0 && problem.regions.has_value();

  RunRecord rec;
  rec.instance = instance;
  rec.seed = config.seed + static_cast<std::uint64_t>(instance);
  std::vector<double> params = initial_parameters(circuit.param_count, rec.seed, config.init_low, config.init_high);
  Adam adam(config.adam, params.size());

  for (int epoch = 0; epoch < config.max_epochs; ++epoch) {
    EnergyAndGradient eg;
    if (config.gradient == GradientMethod::adjoint) {
      eg = adjoint_gradient(circuit, params, h, initial);
    } else {
      eg.state = prepare(circuit, params, initial);
      eg.energy = h.expectation(eg.state);
      eg.gradient = gradient(circuit, params, h, initial);
    }
    if (!std::isfinite(eg.energy) || !all_finite(eg.gradient)) {
      rec.diagnostic = "non-finite energy or gradient at epoch " + std::to_string(epoch);
      break;
    }
    rec.energies.push_back(eg.energy);

    const bool stop = epoch > 0 && std::abs(eg.energy - rec.energies[epoch - 1]) < config.early_stop_delta;
    const bool last = stop || epoch + 1 == config.max_epochs;
    if (monitor && (epoch % config.order_param_interval == 0 || last)) {
      rec.gamma_samples.emplace_back(epoch, topological_entropy(eg.state, *problem.regions));
    }
    if (stop) {
      rec.converged = true;
      break;
    }
    if (last) break;
    if (!adam.step(params, eg.gradient)) {
      rec.diagnostic = "Adam update overflowed at epoch " + std::to_string(epoch);
      break;
    }
  }
  if (rec.energies.empty()) {
    rec.energies.push_back(std::numeric_limits<double>::quiet_NaN());
  }
  rec.final_params = std::move(params);
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

double median(std::vector<double> values) {
  if (values.empty()) throw ArgumentError("median of an empty set");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

AggregateReport aggregate(std::span<const RunRecord> runs) {
  if (runs.empty()) throw ArgumentError("cannot aggregate zero runs");
  AggregateReport rep;
  rep.instance_count = static_cast<int>(runs.size());

  std::vector<const RunRecord*> pool;
  for (const auto& r : runs)
    if (r.converged) pool.push_back(&r);
  rep.converged_count = static_cast<int>(pool.size());
  if (pool.empty()) {
    rep.used_fallback = true;
    for (const auto& r : runs)
      if (std::isfinite(r.final_energy())) pool.push_back(&r);
    if (pool.empty()) throw NumericalError("every run ended without a finite energy");
  }
  std::stable_sort(pool.begin(), pool.end(),
                   [](const RunRecord* a, const RunRecord* b) { return a->final_energy() < b->final_energy(); });
  const std::size_t half = (pool.size() + 1) / 2;
  double sum = 0.0, gamma_sum = 0.0;
  std::size_t gamma_count = 0;
  for (std::size_t i = 0; i < half; ++i) {
    sum += pool[i]->final_energy();
    rep.best_half_instances.push_back(pool[i]->instance);
    if (!pool[i]->gamma_samples.empty()) {
      gamma_sum += pool[i]->gamma_samples.back().second;
      ++gamma_count;
    }
  }
  rep.best_half_mean_energy = sum / static_cast<double>(half);
  if (gamma_count > 0) rep.best_half_mean_gamma = gamma_sum / static_cast<double>(gamma_count);
  rep.best_instance = pool.front()->instance;
  rep.best_energy = pool.front()->final_energy();

  std::size_t longest = 0;
  for (const auto& r : runs) longest = std::max(longest, r.energies.size());
  rep.median_curve.reserve(longest);
  for (std::size_t e = 0; e < longest; ++e) {
    std::vector<double> active;
    for (const auto& r : runs)
      if (e < r.energies.size() && std::isfinite(r.energies[e])) active.push_back(r.energies[e]);
    if (active.empty()) break;
    rep.median_curve.push_back(median(std::move(active)));
  }
  return rep;
}

EnsembleResult train_ensemble(const TrainConfig& config, const ProgressCallback& progress) {
  validate(config);
  const Problem problem = build_problem(config);
  EnsembleResult result;
  result.runs.resize(static_cast<std::size_t>(config.instances));
  std::mutex progress_mutex;
  parallel_for(result.runs.size(), config.threads, [&](std::size_t i) {
    result.runs[i] = train_instance(problem, config, static_cast<int>(i));
    if (progress) {
      std::lock_guard lock(progress_mutex);
      progress(result.runs[i]);
    }
  });
  result.report = aggregate(result.runs);
  return result;
}

}  // namespace gg
