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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gg/lattice.hpp"
#include "gg/state.hpp"

namespace gg {

enum class GateKind { rz, ry, cz, cx, rxx, ryy, rzz };
enum class AnsatzKind { gz, gzx, gzxh, cartan };
enum class Connectivity { neighbor, all };

std::string_view to_string(GateKind kind);
std::string_view to_string(AnsatzKind kind);
std::string_view to_string(Connectivity c);
AnsatzKind parse_ansatz_kind(std::string_view name);

bool is_two_qubit(GateKind kind) noexcept;

/// One parameterized gate. For cx, q0 is the control. q1 is -1 for
/// single-qubit kinds.
struct GateInstr {
  GateKind kind = GateKind::rz;
  int q0 = 0;
  int q1 = -1;
  int param = 0;
  friend bool operator==(const GateInstr&, const GateInstr&) = default;
};

struct GateRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const GateRange&, const GateRange&) = default;
};

/// A layered parameterized circuit. Every gate owns exactly one parameter and
/// parameter indices follow gate order.
///
/// Each layer is an R3 block (RZ, RY, RZ on every qubit, qubit order; the
/// parameters of qubit q in layer l are l * per_layer + 3q + {0, 1, 2})
/// followed by the layer's two-qubit gates. `global_gate_count` is the
/// number of GCZ/GCX invocations the two-qubit blocks compile to; it is
/// empty for Cartan circuits, which have no global-gate realization.
struct Circuit {
  int qubits = 0;
  int layers = 0;
  AnsatzKind kind = AnsatzKind::gz;
  Connectivity connectivity = Connectivity::neighbor;
  std::vector<GateInstr> gates;
  int param_count = 0;
  std::optional<int> global_gate_count;
  std::vector<GateRange> layer_boundaries;
  int links_per_layer = 0;

  int params_per_layer() const noexcept { return layers == 0 ? 0 : param_count / layers; }
  std::size_t two_qubit_gate_count() const noexcept;
};

Circuit build_gz(const Lattice& lattice, int k);
Circuit build_gzx(const Lattice& lattice, int k);
Circuit build_gzxh(const Lattice& lattice, int k);
Circuit build_cartan(const Lattice& lattice, int k);
Circuit build_ansatz(AnsatzKind kind, const Lattice& lattice, int k);

/// Same layer template as `base` on a square lattice whose links are the
/// deduplicated all-to-all pairs of every plaquette.
Circuit build_all_variant(const Lattice& square_lattice, int k, AnsatzKind base);

/// Builds from an explicit ordered link list. The other builders forward here.
Circuit build_from_links(AnsatzKind kind, int qubits, std::span<const Link> links, int k);

enum class R3Slot { first_rz = 0, ry = 1, last_rz = 2 };

/// Parameter index of one rotation in the R3 block of `layer` on `qubit`.
int r3_param_index(const Circuit& circuit, int layer, int qubit, R3Slot slot);

/// Runs the circuit on `state` in place. Throws ShapeError on a parameter
/// count or qubit count mismatch.
void run_circuit(const Circuit& circuit, std::span<const double> params, StateVector& state);

// Unchecked single-gate application at angle theta (or its inverse).
void apply_gate(const GateInstr& gate, double theta, std::span<Complex> amps) noexcept;
void apply_gate_inverse(const GateInstr& gate, double theta, std::span<Complex> amps) noexcept;

nlohmann::json to_json(const Circuit& circuit);

}  // namespace gg
