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

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gg/lattice.hpp"
#include "gg/state.hpp"

namespace gg {

/// Three disjoint qubit sets whose union leaves at least one qubit out.
struct RegionSpec {
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> c;
  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

/// Throws ArgumentError unless the regions are non-empty, in range, pairwise
/// disjoint, strictly smaller than the whole system together, and small enough
/// for the partial-trace guard.
void validate(const RegionSpec& regions, int qubits);

struct TopologicalEntropy {
  // S(A), S(B), S(C), S(AB), S(AC), S(BC), S(ABC), in nats.
  double s_a = 0, s_b = 0, s_c = 0, s_ab = 0, s_ac = 0, s_bc = 0, s_abc = 0;
  /// S_A + S_B + S_C + S_ABC - S_AB - S_AC - S_BC.
  double combination = 0.0;
  /// Constant correction in S = alpha L - gamma; equals -combination.
  double gamma = 0.0;
};

TopologicalEntropy topological_entropy_terms(const StateVector& state, const RegionSpec& regions);

inline double topological_entropy(const StateVector& state, const RegionSpec& regions) {
  return topological_entropy_terms(state, regions).gamma;
}

/// Three edge pairs around the central vertex of a toric_edge lattice with at
/// least 2x2 plaquettes: the two edges of the plaquette up-left of the
/// centre that do not touch the centre are split between A and B, each
/// paired with one central edge; C holds the other two central edges.
/// For 2x2 plaquettes this is A = {0, 3}, B = {2, 5}, C = {6, 8}.
RegionSpec default_toric_regions(const Lattice& lattice);

nlohmann::json to_json(const RegionSpec& regions);
RegionSpec regions_from_json(const nlohmann::json& j);

}  // namespace gg
