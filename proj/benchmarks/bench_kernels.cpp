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

#include <benchmark/benchmark.h>

#include <numbers>

#include "gg/circuit.hpp"
#include "gg/expressibility.hpp"
#include "gg/lattice.hpp"
#include "gg/pauli.hpp"
#include "gg/state.hpp"
#include "gg/vqe.hpp"

namespace {

void BM_RotationY(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  gg::StateVector psi = gg::StateVector::zero(n);
  const gg::Matrix2 u = gg::ry(0.3);
  for (auto _ : st) {
    gg::kernel::one_qubit(psi.amplitudes(), n / 2, u);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(psi.dimension()));
}
BENCHMARK(BM_RotationY)->Arg(12)->Arg(16)->Arg(20);

void BM_ControlledX(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  gg::StateVector psi = gg::StateVector::zero(n);
  for (auto _ : st) {
    gg::apply_cx_theta(psi, 0, n - 1, 0.7);
    benchmark::ClobberMemory();
  }
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(psi.dimension()));
}
BENCHMARK(BM_ControlledX)->Arg(12)->Arg(16)->Arg(20);

void BM_ToricEnergy(benchmark::State& st) {
  const gg::Lattice lat = gg::build_toric_edge(2, 2);
  const gg::PauliSum h = gg::toric_code_hamiltonian(lat, 0.3);
  const gg::Circuit c = gg::build_gzx(lat, 4);
  const auto params = gg::initial_parameters(c.param_count, 1, 0.0, 2 * std::numbers::pi);
  const gg::StateVector zero = gg::StateVector::zero(c.qubits);
  for (auto _ : st) benchmark::DoNotOptimize(gg::evaluate(c, params, h, zero));
}
BENCHMARK(BM_ToricEnergy)->Unit(benchmark::kMillisecond);

void BM_AdjointGradient(benchmark::State& st) {
  const gg::Lattice lat = gg::build_toric_edge(2, 2);
  const gg::PauliSum h = gg::toric_code_hamiltonian(lat, 0.3);
  const gg::Circuit c = gg::build_gzx(lat, 4);
  const auto params = gg::initial_parameters(c.param_count, 1, 0.0, 2 * std::numbers::pi);
  const gg::StateVector zero = gg::StateVector::zero(c.qubits);
  for (auto _ : st) benchmark::DoNotOptimize(gg::adjoint_gradient(c, params, h, zero).energy);
}
BENCHMARK(BM_AdjointGradient)->Unit(benchmark::kMillisecond);

void BM_ChainProbeEnergy(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const gg::Circuit c = gg::build_gzx(gg::build_chain(n), 6);
  const gg::PauliSum h = gg::z_probe(n, n - 1);
  const auto params = gg::initial_parameters(c.param_count, 2, 0.0, 2 * std::numbers::pi);
  const gg::StateVector zero = gg::StateVector::zero(n);
  for (auto _ : st) benchmark::DoNotOptimize(gg::evaluate(c, params, h, zero));
}
BENCHMARK(BM_ChainProbeEnergy)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_PairFidelities(benchmark::State& st) {
  const auto ens = gg::StateEnsemble::haar(8, static_cast<std::size_t>(st.range(0)), 3);
  for (auto _ : st) benchmark::DoNotOptimize(gg::pair_fidelities(ens).values.data());
}
BENCHMARK(BM_PairFidelities)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
