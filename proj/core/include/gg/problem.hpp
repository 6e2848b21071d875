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

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gg/circuit.hpp"
#include "gg/lattice.hpp"
#include "gg/pauli.hpp"
#include "gg/topology.hpp"

namespace gg {

/// Lattice selector. Text form: "<n>" (chain), "<r>x<c>" (square sites) or
/// "<r>x<c>p" (toric edges around r x c plaquettes).
struct LatticeSpec {
  LatticeKind kind = LatticeKind::chain;
  int rows = 1;
  int cols = 2;
  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

LatticeSpec parse_lattice_spec(std::string_view text);
std::string to_string(const LatticeSpec& spec);
Lattice build_lattice(const LatticeSpec& spec);

enum class ModelKind { toric, heisenberg, z_probe };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);

struct ModelSpec {
  ModelKind kind = ModelKind::toric;
  double h = 0.0;   // toric field
  double j2 = 0.0;  // Heisenberg next-nearest coupling
  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

/// toric needs a toric_edge lattice, heisenberg a square one; z_probe puts Z
/// on the last qubit of any lattice.
PauliSum build_hamiltonian(const ModelSpec& model, const Lattice& lattice);

struct AnsatzSpec {
  AnsatzKind kind = AnsatzKind::gzx;
  Connectivity connectivity = Connectivity::neighbor;
  int layers = 1;
  friend bool operator==(const AnsatzSpec&, const AnsatzSpec&) = default;
};

Circuit build_circuit(const AnsatzSpec& spec, const Lattice& lattice);

/// Everything an experiment instance needs, built once and shared read-only.
struct Problem {
  Lattice lattice;
  Circuit circuit;
  PauliSum hamiltonian;
  std::optional<RegionSpec> regions;
};

Problem build_problem(const LatticeSpec& lattice, const AnsatzSpec& ansatz, const ModelSpec& model,
                      std::optional<RegionSpec> regions = std::nullopt);

}  // namespace gg
