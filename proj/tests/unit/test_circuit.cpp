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

#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "gg/circuit.hpp"
#include "gg/error.hpp"
#include "oracles.hpp"

using gg::AnsatzKind;
using gg::Circuit;
using gg::GateKind;

namespace {

std::size_t count_kind(const Circuit& c, GateKind kind) {
  std::size_t n = 0;
  for (const auto& g : c.gates) n += g.kind == kind;
  return n;
}

void expect_structure(const Circuit& c) {
  ASSERT_EQ(static_cast<int>(c.gates.size()), c.param_count);
  for (int i = 0; i < c.param_count; ++i) {
    const auto& g = c.gates[i];
    EXPECT_EQ(g.param, i);
    if (gg::is_two_qubit(g.kind)) {
      EXPECT_NE(g.q0, g.q1);
      EXPECT_GE(g.q1, 0);
    } else {
      EXPECT_EQ(g.q1, -1);
    }
  }
  ASSERT_EQ(static_cast<int>(c.layer_boundaries.size()), c.layers);
  for (int l = 0; l < c.layers; ++l) {
    const auto& r = c.layer_boundaries[l];
    for (int q = 0; q < c.qubits; ++q) {
      EXPECT_EQ(c.gates[r.begin + 3 * q].kind, GateKind::rz);
      EXPECT_EQ(c.gates[r.begin + 3 * q + 1].kind, GateKind::ry);
      EXPECT_EQ(c.gates[r.begin + 3 * q + 2].kind, GateKind::rz);
      EXPECT_EQ(c.gates[r.begin + 3 * q].q0, q);
    }
  }
}

}  // namespace

TEST(Gz, ChainFourOneLayer) {
  const Circuit c = gg::build_gz(gg::build_chain(4), 1);
  EXPECT_EQ(count_kind(c, GateKind::rz) + count_kind(c, GateKind::ry), 12u);
  EXPECT_EQ(count_kind(c, GateKind::cz), 3u);
  EXPECT_EQ(c.param_count, 15);
  EXPECT_EQ(c.global_gate_count, 1);
  expect_structure(c);
}

TEST(Gz, ToricAndGlobalGates) {
  EXPECT_EQ(gg::build_gz(gg::build_toric_edge(2, 2), 1).param_count, 52);
  EXPECT_EQ(gg::build_gz(gg::build_toric_edge(2, 2), 4).global_gate_count, 4);
  EXPECT_THROW(gg::build_gz(gg::build_chain(4), 0), gg::ArgumentError);
}

TEST(Gzx, Counts) {
  const auto t = gg::build_toric_edge(2, 2);
  EXPECT_EQ(gg::build_gzx(t, 1).param_count, 68);
  EXPECT_EQ(gg::build_gzx(gg::build_chain(4), 2).param_count, 36);
  EXPECT_EQ(gg::build_gzx(t, 4).global_gate_count, 8);
}

TEST(Gzx, CxUsesLinkOrderAndFirstEndpointAsControl) {
  const auto lat = gg::build_toric_edge(1, 1);
  const Circuit c = gg::build_gzx(lat, 1);
  std::vector<gg::GateInstr> cx;
  for (const auto& g : c.gates)
    if (g.kind == GateKind::cx) cx.push_back(g);
  ASSERT_EQ(cx.size(), lat.links.size());
  for (std::size_t i = 0; i < cx.size(); ++i) {
    EXPECT_EQ(cx[i].q0, lat.links[i].a);
    EXPECT_EQ(cx[i].q1, lat.links[i].b);
  }
}

TEST(Gzxh, ChainFourSplit) {
  const Circuit c = gg::build_gzxh(gg::build_chain(4), 1);
  std::vector<std::pair<int, int>> cz, cx;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::cz) cz.emplace_back(g.q0, g.q1);
    if (g.kind == GateKind::cx) cx.emplace_back(g.q0, g.q1);
  }
  EXPECT_EQ(cz, (std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(cx, (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(c.param_count, 15);
}

TEST(Gzxh, ToricSplitAndGateCountMatchesGz) {
  const auto t = gg::build_toric_edge(2, 2);
  const Circuit c = gg::build_gzxh(t, 1);
  EXPECT_EQ(count_kind(c, GateKind::cz), 8u);
  EXPECT_EQ(count_kind(c, GateKind::cx), 8u);
  EXPECT_EQ(c.param_count, 52);
  for (int k = 1; k <= 4; ++k) {
    for (const auto& lat : {gg::build_chain(7), gg::build_square(3, 3), t}) {
      EXPECT_EQ(gg::build_gzxh(lat, k).two_qubit_gate_count(), gg::build_gz(lat, k).two_qubit_gate_count());
      EXPECT_EQ(gg::build_gzxh(lat, k).global_gate_count, 2 * k);
    }
  }
}

TEST(Cartan, Counts) {
  EXPECT_EQ(gg::build_cartan(gg::build_toric_edge(2, 2), 1).param_count, 84);
  const Circuit c = gg::build_cartan(gg::build_chain(2), 1);
  EXPECT_EQ(c.param_count, 9);
  EXPECT_FALSE(c.global_gate_count.has_value());
  EXPECT_EQ(c.gates[6].kind, GateKind::rxx);
  EXPECT_EQ(c.gates[7].kind, GateKind::ryy);
  EXPECT_EQ(c.gates[8].kind, GateKind::rzz);
}

TEST(Cartan, ZeroLinkAnglesReduceToSingleQubitLayer) {
  const Circuit c = gg::build_cartan(gg::build_chain(3), 2);
  auto params = oracle::random_params(c.param_count, 5);
  for (const auto& g : c.gates)
    if (gg::is_two_qubit(g.kind)) params[g.param] = 0.0;
  gg::StateVector a = gg::StateVector::zero(3);
  gg::run_circuit(c, params, a);
  gg::StateVector b = gg::StateVector::zero(3);
  for (const auto& g : c.gates)
    if (!gg::is_two_qubit(g.kind)) gg::apply_gate(g, params[g.param], b.amplitudes());
  EXPECT_LT(oracle::max_diff(a, b), 1e-14);
}

TEST(AllVariant, LinkCounts) {
  EXPECT_EQ(gg::build_all_variant(gg::build_square(2, 2), 1, AnsatzKind::gz).links_per_layer, 6);
  const Circuit c = gg::build_all_variant(gg::build_square(2, 3), 2, AnsatzKind::gzx);
  EXPECT_EQ(c.links_per_layer, 11);
  EXPECT_EQ(c.param_count, 2 * (3 * 6 + 2 * 11));
  EXPECT_EQ(c.connectivity, gg::Connectivity::all);
  EXPECT_THROW(gg::build_all_variant(gg::build_chain(4), 1, AnsatzKind::gz), gg::ArgumentError);
}

TEST(R3Index, FollowsLayout) {
  const Circuit c = gg::build_gzx(gg::build_chain(5), 3);
  const int per = c.params_per_layer();
  EXPECT_EQ(per, 3 * 5 + 2 * 4);
  for (int l = 0; l < 3; ++l)
    for (int q = 0; q < 5; ++q) {
      const int idx = gg::r3_param_index(c, l, q, gg::R3Slot::ry);
      EXPECT_EQ(idx, l * per + 3 * q + 1);
      EXPECT_EQ(c.gates[idx].kind, GateKind::ry);
      EXPECT_EQ(c.gates[idx].q0, q);
    }
  EXPECT_THROW(gg::r3_param_index(c, 3, 0, gg::R3Slot::ry), gg::ArgumentError);
  EXPECT_THROW(gg::r3_param_index(c, 0, 5, gg::R3Slot::ry), gg::ArgumentError);
}

TEST(Run, MatchesDenseOracleForEveryAnsatz) {
  const auto lat = gg::build_chain(4);
  for (auto kind : {AnsatzKind::gz, AnsatzKind::gzx, AnsatzKind::gzxh, AnsatzKind::cartan}) {
    const Circuit c = gg::build_ansatz(kind, lat, 2);
    const auto params = oracle::random_params(c.param_count, 3);
    gg::StateVector s = gg::StateVector::zero(4);
    gg::run_circuit(c, params, s);
    const oracle::Vec want = oracle::circuit(c, params).col(0);
    EXPECT_LT((oracle::to_vec(s) - want).norm(), 1e-12) << gg::to_string(kind);
  }
}

TEST(Run, InverseUndoesEachGate) {
  const Circuit c = gg::build_cartan(gg::build_chain(3), 1);
  const auto params = oracle::random_params(c.param_count, 8);
  gg::StateVector s = oracle::random_state(3, 8);
  const gg::StateVector s0 = s;
  for (const auto& g : c.gates) gg::apply_gate(g, params[g.param], s.amplitudes());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) gg::apply_gate_inverse(*it, params[it->param], s.amplitudes());
  EXPECT_LT(oracle::max_diff(s, s0), 1e-13);
}

TEST(Run, RejectsMismatchedInputs) {
  const Circuit c = gg::build_gz(gg::build_chain(3), 1);
  gg::StateVector s = gg::StateVector::zero(3);
  std::vector<double> short_params(c.param_count - 1, 0.0);
  EXPECT_THROW(gg::run_circuit(c, short_params, s), gg::ShapeError);
  gg::StateVector wrong = gg::StateVector::zero(4);
  std::vector<double> params(c.param_count, 0.0);
  EXPECT_THROW(gg::run_circuit(c, params, wrong), gg::ShapeError);
}

TEST(Properties, ParamCountFormulas) {
  std::vector<gg::Lattice> lattices;
  for (int n = 2; n <= 16; ++n) lattices.push_back(gg::build_chain(n));
  for (int r = 2; r <= 4; ++r) lattices.push_back(gg::build_square(r, r));
  lattices.push_back(gg::build_square(2, 3));
  lattices.push_back(gg::build_toric_edge(1, 1));
  lattices.push_back(gg::build_toric_edge(2, 2));
  for (const auto& lat : lattices) {
    const int n = lat.n_sites;
    const int m = lat.link_count();
    for (int k = 1; k <= 6; ++k) {
      const Circuit gz = gg::build_gz(lat, k);
      const Circuit gzx = gg::build_gzx(lat, k);
      const Circuit gzxh = gg::build_gzxh(lat, k);
      const Circuit cartan = gg::build_cartan(lat, k);
      EXPECT_EQ(gz.param_count, k * (3 * n + m));
      EXPECT_EQ(gzx.param_count, k * (3 * n + 2 * m));
      EXPECT_EQ(gzxh.param_count, k * (3 * n + m));
      EXPECT_EQ(cartan.param_count, k * (3 * n + 3 * m));
      EXPECT_EQ(gz.global_gate_count, k);
      EXPECT_EQ(gzx.global_gate_count, 2 * k);
      for (const auto* c : {&gz, &gzx, &gzxh, &cartan}) expect_structure(*c);
    }
  }
}

TEST(Properties, TwoQubitLayerOrderDoesNotMatter) {
  // Permuting the CZ gates (and, separately, the disjoint CX gates) of a
  // layer leaves the state unchanged.
  const auto lat = gg::build_toric_edge(2, 2);
  const Circuit c = gg::build_gz(lat, 1);
  const auto params = oracle::random_params(c.param_count, 12);
  gg::StateVector a = oracle::random_state(12, 12);
  gg::StateVector b = a;
  std::vector<gg::GateInstr> cz;
  for (const auto& g : c.gates)
    if (g.kind == GateKind::cz) cz.push_back(g);
  for (const auto& g : cz) gg::apply_gate(g, params[g.param], a.amplitudes());
  std::mt19937_64 rng(3);
  std::shuffle(cz.begin(), cz.end(), rng);
  for (const auto& g : cz) gg::apply_gate(g, params[g.param], b.amplitudes());
  EXPECT_LT(oracle::max_diff(a, b), 1e-12);

  const Circuit h = gg::build_gzxh(gg::build_chain(8), 1);
  std::vector<gg::GateInstr> cx;
  for (const auto& g : h.gates)
    if (g.kind == GateKind::cx) cx.push_back(g);
  gg::StateVector x = oracle::random_state(8, 13);
  gg::StateVector y = x;
  for (const auto& g : cx) gg::apply_gate(g, 0.3 * g.param, x.amplitudes());
  std::reverse(cx.begin(), cx.end());
  for (const auto& g : cx) gg::apply_gate(g, 0.3 * g.param, y.amplitudes());
  EXPECT_LT(oracle::max_diff(x, y), 1e-12);
}

TEST(Json, ExportsGates) {
  const Circuit c = gg::build_gzxh(gg::build_chain(3), 1);
  const auto j = gg::to_json(c);
  EXPECT_EQ(j.at("gates").size(), c.gates.size());
  EXPECT_EQ(j.at("param_count").get<int>(), c.param_count);
}
