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

#include "gg/expressibility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "gg/error.hpp"
#include "gg/parallel.hpp"

namespace gg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxBlock = 4096;
constexpr std::size_t kMaxDirectDim = 4096;
constexpr double kDegenerateMass = 1e-3;
constexpr double kKlCap = 690.0;  // -ln(1e-300)

std::mt19937_64 member_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t{index} >> 32)};
  return std::mt19937_64(seq);
}

// Columns are the members [begin, begin + cols).
Eigen::MatrixXcd load_block(const StateEnsemble& ens, std::size_t begin, std::size_t end, int threads) {
  const std::size_t d = ens.dimension();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(end - begin));
  if (ens.resident()) {
    const auto& states = ens.resident_states();
    for (std::size_t i = begin; i < end; ++i) {
      const auto amps = states[i].amplitudes();
      std::copy(amps.begin(), amps.end(), m.col(static_cast<Eigen::Index>(i - begin)).data());
    }
    return m;
  }
  parallel_for(end - begin, threads, [&](std::size_t k) {
    const StateVector s = ens.state(begin + k);
    const auto amps = s.amplitudes();
    std::copy(amps.begin(), amps.end(), m.col(static_cast<Eigen::Index>(k)).data());
  });
  return m;
}

std::size_t block_size(const StateEnsemble& ens, const PairOptions& opt) {
  const std::size_t bytes_per_state = ens.dimension() * sizeof(Complex);
  std::size_t b = opt.memory_budget / (2 * bytes_per_state);
  b = std::clamp<std::size_t>(b, 1, kMaxBlock);
  return std::min(b, std::max<std::size_t>(ens.size(), 1));
}

// Calls fn(bi_begin, Mi, bj_begin, Mj) for every block pair bi <= bj.
template <typename Fn>
void for_each_block_pair(const StateEnsemble& ens, const PairOptions& opt, Fn&& fn) {
  const std::size_t s = ens.size();
  const std::size_t b = block_size(ens, opt);
  for (std::size_t i0 = 0; i0 < s; i0 += b) {
    const Eigen::MatrixXcd mi = load_block(ens, i0, std::min(s, i0 + b), opt.threads);
    for (std::size_t j0 = i0; j0 < s; j0 += b) {
      if (j0 == i0) {
        fn(i0, mi, j0, mi);
      } else {
        const Eigen::MatrixXcd mj = load_block(ens, j0, std::min(s, j0 + b), opt.threads);
        fn(i0, mi, j0, mj);
      }
    }
  }
}

void check_t(int t) {
  if (t != 1 && t != 2) throw UnsupportedError("moment order t=" + std::to_string(t) + " is not supported (t must be 1 or 2)");
}

double haar_coefficient(std::size_t d, int t) {
  const double dd = static_cast<double>(d);
  return t == 1 ? 1.0 / dd : 2.0 / (dd * (dd + 1.0));
}

double symmetric_dimension(std::size_t d, int t) {
  const double dd = static_cast<double>(d);
  return t == 1 ? dd : dd * (dd + 1.0) / 2.0;
}

double direct_moment_distance(const StateEnsemble& ens, int t, const PairOptions& opt) {
  const std::size_t d = ens.dimension();
  const std::size_t D = t == 1 ? d : d * d;
  if (D > kMaxDirectDim) throw SizeError("direct moment distance limited to d^t <= " + std::to_string(kMaxDirectDim));
  const auto Di = static_cast<Eigen::Index>(D);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(Di, Di);
  const std::size_t s = ens.size();
  const std::size_t b = block_size(ens, opt);
  for (std::size_t i0 = 0; i0 < s; i0 += b) {
    Eigen::MatrixXcd cols = load_block(ens, i0, std::min(s, i0 + b), opt.threads);
    if (t == 2) {
      Eigen::MatrixXcd tensor(Di, cols.cols());
      for (Eigen::Index c = 0; c < cols.cols(); ++c) {
        for (std::size_t a = 0; a < d; ++a)
          tensor.col(c).segment(static_cast<Eigen::Index>(a * d), static_cast<Eigen::Index>(d)) =
              cols(static_cast<Eigen::Index>(a), c) * cols.col(c);
      }
      cols = std::move(tensor);
    }
    m.noalias() += cols * cols.adjoint();
  }
  m /= static_cast<double>(s);
  const double c = haar_coefficient(d, t);
  if (t == 1) {
    m.diagonal().array() -= c;
  } else {
    // c * (I + SWAP) / 2
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t bb = 0; bb < d; ++bb) {
        const auto row = static_cast<Eigen::Index>(a * d + bb);
        m(row, row) -= c / 2.0;
        m(row, static_cast<Eigen::Index>(bb * d + a)) -= c / 2.0;
      }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double log_survival(double f, double dm1) {
  // ln (1 - f)^{d-1}
  if (f >= 1.0) return -std::numeric_limits<double>::infinity();
  return dm1 * std::log1p(-f);
}

double log_bin_mass(double lo, double hi, std::size_t d) {
  const double dm1 = static_cast<double>(d) - 1.0;
  const double a = log_survival(lo, dm1);
  const double b = log_survival(hi, dm1);
  return a + std::log1p(-std::exp(b - a));
}

}  // namespace

// --- ensembles --------------------------------------------------------------

StateEnsemble StateEnsemble::from_circuit(const Circuit& circuit, std::size_t samples, std::uint64_t seed,
                                          std::optional<double> fixed_value) {
  if (samples < 2) throw ArgumentError("ensemble needs at least 2 samples");
  StateEnsemble e;
  e.source_ = Source::circuit;
  e.qubits_ = circuit.qubits;
  e.samples_ = samples;
  e.seed_ = seed;
  e.circuit_ = circuit;
  e.fixed_value_ = fixed_value;
  return e;
}

StateEnsemble StateEnsemble::haar(int qubits, std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw ArgumentError("ensemble needs at least 2 samples");
  if (qubits < 1 || qubits > kMaxQubits) throw SizeError("qubit count out of range");
  StateEnsemble e;
  e.source_ = Source::haar;
  e.qubits_ = qubits;
  e.samples_ = samples;
  e.seed_ = seed;
  return e;
}

StateEnsemble StateEnsemble::from_states(std::vector<StateVector> states) {
  if (states.size() < 2) throw ArgumentError("ensemble needs at least 2 samples");
  const int n = states.front().qubit_count();
  for (const auto& s : states)
    if (s.qubit_count() != n) throw ShapeError("ensemble members differ in qubit count");
  StateEnsemble e;
  e.qubits_ = n;
  e.samples_ = states.size();
  e.states_ = std::move(states);
  return e;
}

StateVector StateEnsemble::state(std::size_t i) const {
  if (i >= samples_) throw IndexError("ensemble member " + std::to_string(i) + " out of range");
  if (!states_.empty()) return states_[i];
  auto rng = member_rng(seed_, i);
  if (source_ == Source::haar) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<Complex> amps(dimension());
    for (auto& a : amps) {
      const double re = g(rng);
      a = Complex(re, g(rng));
    }
    StateVector s = StateVector::from_amplitudes(std::move(amps));
    s.normalize();
    return s;
  }
  std::vector<double> params(static_cast<std::size_t>(circuit_->param_count));
  if (fixed_value_) {
    std::fill(params.begin(), params.end(), *fixed_value_);
  } else {
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (auto& p : params) p = u(rng);
  }
  StateVector s = StateVector::zero(qubits_);
  run_circuit(*circuit_, params, s);
  return s;
}

std::vector<StateVector> StateEnsemble::block(std::size_t begin, std::size_t end, int threads) const {
  if (begin > end || end > samples_) throw IndexError("ensemble block out of range");
  std::vector<StateVector> out(end - begin, StateVector::zero(1));
  parallel_for(end - begin, threads, [&](std::size_t k) { out[k] = state(begin + k); });
  return out;
}

StateEnsemble StateEnsemble::head(std::size_t count) const {
  if (count < 2 || count > samples_) throw ArgumentError("head size must be in [2, S]");
  StateEnsemble e = *this;
  e.samples_ = count;
  if (!e.states_.empty()) e.states_.resize(count, StateVector::zero(1));
  return e;
}

bool StateEnsemble::materialize(std::size_t bytes, int threads) {
  if (!states_.empty()) return true;
  if (samples_ > bytes / (dimension() * sizeof(Complex))) return false;
  states_ = block(0, samples_, threads);
  return true;
}

std::vector<StateVector> sample_states(const Circuit& circuit, std::size_t samples, std::uint64_t seed) {
  return StateEnsemble::from_circuit(circuit, samples, seed).block(0, samples);
}

// --- pair statistics --------------------------------------------------------

FidelitySample pair_fidelities(const StateEnsemble& ens, const PairOptions& opt) {
  const std::size_t s = ens.size();
  const std::size_t total = s * (s - 1) / 2;
  FidelitySample out;
  if (total <= opt.max_pairs) {
    out.values.resize(total);
    for_each_block_pair(ens, opt, [&](std::size_t i0, const Eigen::MatrixXcd& mi, std::size_t j0,
                                      const Eigen::MatrixXcd& mj) {
      const Eigen::MatrixXcd g = mi.adjoint() * mj;
      for (Eigen::Index a = 0; a < g.rows(); ++a) {
        const std::size_t i = i0 + static_cast<std::size_t>(a);
        for (Eigen::Index b = 0; b < g.cols(); ++b) {
          const std::size_t j = j0 + static_cast<std::size_t>(b);
          if (j <= i) continue;
          out.values[i * s - i * (i + 1) / 2 + (j - i - 1)] = std::norm(g(a, b));
        }
      }
    });
    return out;
  }

  out.all_pairs = false;
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, s - 1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs(opt.max_pairs);
  for (auto& p : pairs) {
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    p = {std::min(i, j), std::max(i, j)};
  }
  const std::size_t b = block_size(ens, opt);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> buckets;
  for (std::size_t k = 0; k < pairs.size(); ++k) buckets[{pairs[k].first / b, pairs[k].second / b}].push_back(k);
  out.values.resize(pairs.size());
  for_each_block_pair(ens, opt, [&](std::size_t i0, const Eigen::MatrixXcd& mi, std::size_t j0,
                                    const Eigen::MatrixXcd& mj) {
    const auto it = buckets.find({i0 / b, j0 / b});
    if (it == buckets.end()) return;
    const auto& members = it->second;
    parallel_for(members.size(), opt.threads, [&](std::size_t m) {
      const auto [i, j] = pairs[members[m]];
      const Complex ov = mi.col(static_cast<Eigen::Index>(i - i0)).dot(mj.col(static_cast<Eigen::Index>(j - j0)));
      out.values[members[m]] = std::norm(ov);
    });
  });
  return out;
}

Eigen::MatrixXcd gram_matrix(const StateEnsemble& ens, const PairOptions& opt) {
  const auto s = static_cast<Eigen::Index>(ens.size());
  Eigen::MatrixXcd g(s, s);
  for_each_block_pair(ens, opt, [&](std::size_t i0, const Eigen::MatrixXcd& mi, std::size_t j0,
                                    const Eigen::MatrixXcd& mj) {
    const Eigen::MatrixXcd blk = mi.adjoint() * mj;
    const auto r = static_cast<Eigen::Index>(i0), c = static_cast<Eigen::Index>(j0);
    g.block(r, c, blk.rows(), blk.cols()) = blk;
    if (i0 != j0) g.block(c, r, blk.cols(), blk.rows()) = blk.adjoint();
  });
  return g;
}

double moment_distance_from_gram(const Eigen::MatrixXcd& gram, std::size_t dimension, int t) {
  check_t(t);
  const double s = static_cast<double>(gram.rows());
  Eigen::MatrixXcd a = t == 1 ? Eigen::MatrixXcd(gram / s) : Eigen::MatrixXcd(gram.array().square().matrix() / s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& lam = es.eigenvalues();
  const double top = std::max(lam.maxCoeff(), 1.0 / s);
  const double tol = 1e-10 * top;
  const double c = haar_coefficient(dimension, t);
  double sum = 0.0;
  double rank = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] > tol) {
      sum += std::abs(lam[i] - c);
      rank += 1.0;
    }
  }
  return sum + std::max(0.0, symmetric_dimension(dimension, t) - rank) * c;
}

double moment_distance(const StateEnsemble& ens, int t, MomentMethod method, const PairOptions& opt) {
  check_t(t);
  const std::size_t d = ens.dimension();
  const std::size_t direct_dim = t == 1 ? d : d * d;
  if (method == MomentMethod::automatic) {
    method = (direct_dim <= kMaxDirectDim && direct_dim <= ens.size()) ? MomentMethod::direct : MomentMethod::gram;
  }
  if (method == MomentMethod::direct) return direct_moment_distance(ens, t, opt);
  return moment_distance_from_gram(gram_matrix(ens, opt), d, t);
}

double porter_thomas_mass(double lo, double hi, std::size_t dimension) {
  if (dimension < 2) throw ArgumentError("Porter-Thomas law needs d >= 2");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) throw ArgumentError("bin must lie within [0, 1]");
  if (lo == hi) return 0.0;
  return std::exp(log_bin_mass(lo, hi, dimension));
}

KlResult fidelity_kl(std::span<const double> fidelities, std::size_t dimension, int bins) {
  if (bins < 10) throw ArgumentError("KL needs at least 10 bins");
  if (fidelities.size() < 100) throw ArgumentError("KL needs at least 100 fidelity samples");
  if (dimension < 2) throw ArgumentError("Porter-Thomas law needs d >= 2");
  KlResult r;
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  for (double f : fidelities) {
    const double x = std::clamp(f, 0.0, 1.0);
    const auto b = std::min(static_cast<std::size_t>(x * bins), static_cast<std::size_t>(bins - 1));
    ++counts[b];
  }
  const double n = static_cast<double>(fidelities.size());
  std::size_t occupied = 0;
  r.histogram.resize(counts.size());
  r.haar.resize(counts.size());
  for (std::size_t b = 0; b < counts.size(); ++b) {
    const double lo = static_cast<double>(b) / bins;
    const double hi = b + 1 == counts.size() ? 1.0 : static_cast<double>(b + 1) / bins;
    const double log_q = log_bin_mass(lo, hi, dimension);
    r.haar[b] = std::exp(log_q);
    if (counts[b] == 0) continue;
    ++occupied;
    const double p = static_cast<double>(counts[b]) / n;
    r.histogram[b] = p;
    r.value += p * (std::log(p) - log_q);
  }
  r.value = std::max(r.value, 0.0);
  if (occupied == 1) {
    const auto only = static_cast<std::size_t>(std::find_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }) - counts.begin());
    r.degenerate = r.haar[only] < kDegenerateMass;
    if (r.degenerate) r.value = std::min(r.value, kKlCap);
  }
  return r;
}

FramePotential frame_potential(std::span<const double> fidelities, int t) {
  check_t(t);
  if (fidelities.empty()) throw ArgumentError("frame potential needs at least one pair");
  const double n = static_cast<double>(fidelities.size());
  double mean = 0.0;
  for (double f : fidelities) mean += t == 1 ? f : f * f;
  mean /= n;
  double ss = 0.0;
  for (double f : fidelities) {
    const double x = (t == 1 ? f : f * f) - mean;
    ss += x * x;
  }
  const double sd = fidelities.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return {mean, sd / std::sqrt(n)};
}

double haar_frame_potential(std::size_t dimension, int t) {
  check_t(t);
  return haar_coefficient(dimension, t);
}

EnsembleStats ensemble_stats(const StateEnsemble& ens, const StatsOptions& opt) {
  EnsembleStats st;
  st.sample_count = ens.size();
  st.dimension = ens.dimension();
  FidelitySample fs = pair_fidelities(ens, opt.pairs);
  st.pair_count = fs.pair_count();
  st.all_pairs = fs.all_pairs;
  st.f1 = frame_potential(fs.values, 1);
  st.f2 = frame_potential(fs.values, 2);
  if (fs.values.size() >= 100) st.kl = fidelity_kl(fs.values, st.dimension, opt.bins);
  if (opt.a1_samples >= 2) st.a1 = moment_distance(ens.head(std::min(opt.a1_samples, ens.size())), 1,
                                                   MomentMethod::automatic, opt.pairs);
  if (opt.a2_samples >= 2) st.a2 = moment_distance(ens.head(std::min(opt.a2_samples, ens.size())), 2,
                                                   MomentMethod::automatic, opt.pairs);
  st.fidelity_samples = std::move(fs.values);
  return st;
}

nlohmann::json to_json(const EnsembleStats& st, bool include_fidelities) {
  nlohmann::json j;
  j["sample_count"] = st.sample_count;
  j["dimension"] = st.dimension;
  j["pair_count"] = st.pair_count;
  j["all_pairs"] = st.all_pairs;
  j["a1"] = st.a1 ? nlohmann::json(*st.a1) : nlohmann::json(nullptr);
  j["a2"] = st.a2 ? nlohmann::json(*st.a2) : nlohmann::json(nullptr);
  j["kl"] = {{"value", st.kl.value}, {"degenerate", st.kl.degenerate}, {"bins", st.kl.histogram.size()},
             {"histogram", st.kl.histogram}, {"haar", st.kl.haar}};
  j["f1"] = {{"value", st.f1.value}, {"sem", st.f1.sem}, {"haar", haar_frame_potential(st.dimension, 1)}};
  j["f2"] = {{"value", st.f2.value}, {"sem", st.f2.sem}, {"haar", haar_frame_potential(st.dimension, 2)}};
  if (include_fidelities) j["fidelities"] = st.fidelity_samples;
  return j;
}

}  // namespace gg
