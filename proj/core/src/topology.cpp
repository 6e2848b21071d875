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

#include "gg/topology.hpp"

#include <algorithm>
#include <string>

#include "gg/density.hpp"
#include "gg/error.hpp"

namespace gg {

void validate(const RegionSpec& regions, int qubits) {
  std::vector<int> owner(qubits, -1);
  int total = 0;
  const std::array<const std::vector<int>*, 3> parts = {&regions.a, &regions.b, &regions.c};
  for (int r = 0; r < 3; ++r) {
    const auto& part = *parts[r];
    if (part.empty()) throw ArgumentError("region " + std::string(1, static_cast<char>('A' + r)) + " is empty");
    for (int q : part) {
      if (q < 0 || q >= qubits) throw ArgumentError("region qubit " + std::to_string(q) + " out of range");
      if (owner[q] != -1) throw ArgumentError("regions overlap at qubit " + std::to_string(q));
      owner[q] = r;
    }
    total += static_cast<int>(part.size());
  }
  if (total >= qubits) throw ArgumentError("regions must leave at least one qubit outside A, B and C");
  if (total > kMaxReducedQubits) {
    throw ArgumentError("A, B and C together exceed the " + std::to_string(kMaxReducedQubits) + "-qubit partial-trace guard");
  }
}

TopologicalEntropy topological_entropy_terms(const StateVector& state, const RegionSpec& regions) {
  validate(regions, state.qubit_count());
  auto entropy = [&state](std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> keep;
    for (const auto* p : parts) keep.insert(keep.end(), p->begin(), p->end());
    return von_neumann_entropy(reduced_density_matrix(state, keep));
  };
  TopologicalEntropy t;
  t.s_a = entropy({&regions.a});
  t.s_b = entropy({&regions.b});
  t.s_c = entropy({&regions.c});
  t.s_ab = entropy({&regions.a, &regions.b});
  t.s_ac = entropy({&regions.a, &regions.c});
  t.s_bc = entropy({&regions.b, &regions.c});
  t.s_abc = entropy({&regions.a, &regions.b, &regions.c});
  t.combination = t.s_a + t.s_b + t.s_c + t.s_abc - t.s_ab - t.s_ac - t.s_bc;
  t.gamma = -t.combination;
  return t;
}

RegionSpec default_toric_regions(const Lattice& lattice) {
  if (lattice.kind != LatticeKind::toric_edge || lattice.rows < 2 || lattice.cols < 2) {
    throw ArgumentError("default regions need a toric_edge lattice with at least 2x2 plaquettes");
  }
  auto edge_at = [&lattice](int row, int col) {
    const auto it = std::find(lattice.coords.begin(), lattice.coords.end(), Coord{row, col});
    if (it == lattice.coords.end()) throw ArgumentError("no edge at doubled coordinate");
    return static_cast<int>(it - lattice.coords.begin());
  };
  const int cr = lattice.rows / 2, cc = lattice.cols / 2;  // central vertex
  // Doubled coordinates: horizontal edge (r, c) -> (2r, 2c+1), vertical -> (2r+1, 2c).
  const int top = edge_at(2 * (cr - 1), 2 * (cc - 1) + 1);
  const int left = edge_at(2 * (cr - 1) + 1, 2 * (cc - 1));
  const int centre_up = edge_at(2 * (cr - 1) + 1, 2 * cc);
  const int centre_left = edge_at(2 * cr, 2 * (cc - 1) + 1);
  const int centre_right = edge_at(2 * cr, 2 * cc + 1);
  const int centre_down = edge_at(2 * cr + 1, 2 * cc);
  return RegionSpec{{top, centre_up}, {left, centre_left}, {centre_right, centre_down}};
}

nlohmann::json to_json(const RegionSpec& r) { return {{"A", r.a}, {"B", r.b}, {"C", r.c}}; }

RegionSpec regions_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("regions must be a JSON object with keys A, B, C");
  for (const auto& [key, value] : j.items()) {
    if (key != "A" && key != "B" && key != "C") throw ArgumentError("unknown regions key '" + key + "'");
  }
  try {
    return RegionSpec{j.at("A").get<std::vector<int>>(), j.at("B").get<std::vector<int>>(),
                      j.at("C").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed regions: ") + e.what());
  }
}

}  // namespace gg
