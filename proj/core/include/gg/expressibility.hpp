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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "gg/circuit.hpp"
#include "gg/state.hpp"

namespace gg {

/// A finite ensemble of pure states. Members are either held in memory or
/// regenerated on demand from (seed, index), so results never depend on
/// whether the ensemble fit the memory budget.
class StateEnsemble {
 public:
  /// S states U(theta)|0...0> with theta uniform on [0, 2pi), one private
  /// RNG stream per member. With `fixed_value` every parameter is set to it.
  static StateEnsemble from_circuit(const Circuit& circuit, std::size_t samples, std::uint64_t seed,
                                    std::optional<double> fixed_value = std::nullopt);
  /// S Haar-random states (normalized complex Gaussian vectors).
  static StateEnsemble haar(int qubits, std::size_t samples, std::uint64_t seed);
  static StateEnsemble from_states(std::vector<StateVector> states);

  std::size_t size() const noexcept { return samples_; }
  int qubit_count() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return std::size_t{1} << qubits_; }

  /// Member i (computed, or copied when resident).
  StateVector state(std::size_t i) const;
  /// Members [begin, end).
  std::vector<StateVector> block(std::size_t begin, std::size_t end, int threads = 1) const;

  /// The first `count` members as their own ensemble.
  StateEnsemble head(std::size_t count) const;

  bool resident() const noexcept { return !states_.empty(); }
  const std::vector<StateVector>& resident_states() const noexcept { return states_; }
  /// Stores every member if S * 2^N amplitudes fit in `bytes`. Returns
  /// whether the ensemble is resident afterwards.
  bool materialize(std::size_t bytes, int threads = 1);

 private:
  enum class Source { circuit, haar, explicit_list };
  Source source_ = Source::explicit_list;
  int qubits_ = 0;
  std::size_t samples_ = 0;
  std::uint64_t seed_ = 0;
  std::optional<Circuit> circuit_;
  std::optional<double> fixed_value_;
  std::vector<StateVector> states_;
};

/// Convenience wrapper returning the members of from_circuit(...).
std::vector<StateVector> sample_states(const Circuit& circuit, std::size_t samples, std::uint64_t seed);

struct PairOptions {
  /// All S(S-1)/2 pairs are used when they fit; otherwise this many pairs
  /// are drawn uniformly (i != j) from `seed`.
  std::size_t max_pairs = 2'000'000;
  std::uint64_t seed = 0x5eed;
  /// Bytes of states held at once while streaming over blocks.
  std::size_t memory_budget = std::size_t{1} << 30;
  int threads = 1;
};

struct FidelitySample {
  std::vector<double> values;  // |<psi_i|psi_j>|^2
  bool all_pairs = true;
  std::size_t pair_count() const noexcept { return values.size(); }
};

FidelitySample pair_fidelities(const StateEnsemble& ensemble, const PairOptions& options = {});

/// S x S Gram matrix G_jk = <psi_j|psi_k>.
Eigen::MatrixXcd gram_matrix(const StateEnsemble& ensemble, const PairOptions& options = {});

enum class MomentMethod { automatic, gram, direct };

/// Trace distance between (1/S) sum (|psi><psi|)^{(x)t} and the Haar moment,
/// t in {1, 2}. The gram path uses the S x S spectrum; the direct path
/// diagonalizes the d^t x d^t difference and is limited to small d.
double moment_distance(const StateEnsemble& ensemble, int t, MomentMethod method = MomentMethod::automatic,
                       const PairOptions& options = {});

/// Trace-norm distance from an already computed Gram matrix (entries not
/// yet raised to the t-th power or divided by S).
double moment_distance_from_gram(const Eigen::MatrixXcd& gram, std::size_t dimension, int t);

struct KlResult {
  double value = 0.0;
  /// Every fidelity fell into one bin of Porter-Thomas mass below 1e-3. The
  /// value is then capped at 690 (about -ln 1e-300).
  bool degenerate = false;
  std::vector<double> histogram;  // empirical bin probabilities
  std::vector<double> haar;       // Porter-Thomas bin masses
};

/// KL divergence of the fidelity histogram from the Porter-Thomas law of
/// dimension d, on `bins` uniform bins over [0, 1].
KlResult fidelity_kl(std::span<const double> fidelities, std::size_t dimension, int bins = 75);

/// Porter-Thomas mass of [lo, hi] for dimension d.
double porter_thomas_mass(double lo, double hi, std::size_t dimension);

struct FramePotential {
  double value = 0.0;
  double sem = 0.0;
};

/// Mean of F^t over the sampled pairs, with SEM = std / sqrt(pairs).
FramePotential frame_potential(std::span<const double> fidelities, int t);
double haar_frame_potential(std::size_t dimension, int t);

struct EnsembleStats {
  std::size_t sample_count = 0;
  std::size_t dimension = 0;
  std::size_t pair_count = 0;
  bool all_pairs = true;
  std::vector<double> fidelity_samples;
  std::optional<double> a1, a2;
  KlResult kl;
  FramePotential f1, f2;
};

struct StatsOptions {
  PairOptions pairs{};
  int bins = 75;
  /// Members used for each moment distance (the first a*_samples members);
  /// 0 skips it.
  std::size_t a1_samples = 10'000;
  std::size_t a2_samples = 2'000;
};

EnsembleStats ensemble_stats(const StateEnsemble& ensemble, const StatsOptions& options = {});

nlohmann::json to_json(const EnsembleStats& stats, bool include_fidelities = false);

}  // namespace gg
