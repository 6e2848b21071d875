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

#include "gg/circuit.hpp"

#include <string>

#include "gg/error.hpp"

namespace gg {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::rz: return "RZ";
    case GateKind::ry: return "RY";
    case GateKind::cz: return "CZ";
    case GateKind::cx: return "CX";
    case GateKind::rxx: return "RXX";
    case GateKind::ryy: return "RYY";
    case GateKind::rzz: return "RZZ";
  }
  return "?";
}

std::string_view to_string(AnsatzKind kind) {
  switch (kind) {
    case AnsatzKind::gz: return "gz";
    case AnsatzKind::gzx: return "gzx";
    case AnsatzKind::gzxh: return "gzxh";
    case AnsatzKind::cartan: return "cartan";
  }
  return "?";
}

std::string_view to_string(Connectivity c) { return c == Connectivity::all ? "all" : "neighbor"; }

AnsatzKind parse_ansatz_kind(std::string_view name) {
  if (name == "gz") return AnsatzKind::gz;
  if (name == "gzx") return AnsatzKind::gzx;
  if (name == "gzxh" || name == "gzx_h") return AnsatzKind::gzxh;
  if (name == "cartan") return AnsatzKind::cartan;
  throw ArgumentError("unknown ansatz '" + std::string(name) + "' (expected gz, gzx, gzxh or cartan)");
}

bool is_two_qubit(GateKind kind) noexcept { return kind != GateKind::rz && kind != GateKind::ry; }

std::size_t Circuit::two_qubit_gate_count() const noexcept {
  std::size_t n = 0;
  for (const auto& g : gates) n += is_two_qubit(g.kind) ? 1 : 0;
  return n;
}

Circuit build_from_links(AnsatzKind kind, int qubits, std::span<const Link> links, int k) {
  if (k < 1) throw ArgumentError("layer count must be >= 1, got " + std::to_string(k));
  if (qubits < 1) throw SizeError("circuit needs at least one qubit");
  for (const Link& l : links) {
    if (l.a < 0 || l.b < 0 || l.a >= qubits || l.b >= qubits || l.a == l.b) {
      throw IndexError("invalid link (" + std::to_string(l.a) + ", " + std::to_string(l.b) + ")");
    }
  }

  Circuit c;
  c.qubits = qubits;
  c.layers = k;
  c.kind = kind;
  c.links_per_layer = static_cast<int>(links.size());

  int param = 0;
  auto emit = [&](GateKind g, int q0, int q1 = -1) { c.gates.push_back({g, q0, q1, param++}); };

  for (int layer = 0; layer < k; ++layer) {
    const std::size_t begin = c.gates.size();
    for (int q = 0; q < qubits; ++q) {
      emit(GateKind::rz, q);
      emit(GateKind::ry, q);
      emit(GateKind::rz, q);
    }
    switch (kind) {
      case AnsatzKind::gz:
        for (const Link& l : links) emit(GateKind::cz, l.a, l.b);
        break;
      case AnsatzKind::gzx:
        for (const Link& l : links) emit(GateKind::cz, l.a, l.b);
        for (const Link& l : links) emit(GateKind::cx, l.a, l.b);
        break;
      case AnsatzKind::gzxh:
        for (const Link& l : links)
          if (l.ordinal % 2 == 1) emit(GateKind::cz, l.a, l.b);
        for (const Link& l : links)
          if (l.ordinal % 2 == 0) emit(GateKind::cx, l.a, l.b);
        break;
      case AnsatzKind::cartan:
        for (const Link& l : links) {
          emit(GateKind::rxx, l.a, l.b);
          emit(GateKind::ryy, l.a, l.b);
          emit(GateKind::rzz, l.a, l.b);
        }
        break;
    }
    c.layer_boundaries.push_back({begin, c.gates.size()});
  }
  c.param_count = param;

  switch (kind) {
    case AnsatzKind::gz: c.global_gate_count = k; break;
    case AnsatzKind::gzx:
    case AnsatzKind::gzxh: c.global_gate_count = 2 * k; break;
    case AnsatzKind::cartan: c.global_gate_count.reset(); break;
  }
  return c;
}

Circuit build_gz(const Lattice& lattice, int k) { return build_ansatz(AnsatzKind::gz, lattice, k); }
Circuit build_gzx(const Lattice& lattice, int k) { return build_ansatz(AnsatzKind::gzx, lattice, k); }
Circuit build_gzxh(const Lattice& lattice, int k) { return build_ansatz(AnsatzKind::gzxh, lattice, k); }
Circuit build_cartan(const Lattice& lattice, int k) { return build_ansatz(AnsatzKind::cartan, lattice, k); }

Circuit build_ansatz(AnsatzKind kind, const Lattice& lattice, int k) {
  return build_from_links(kind, lattice.n_sites, lattice.links, k);
}

Circuit build_all_variant(const Lattice& square_lattice, int k, AnsatzKind base) {
  const auto links = all_to_all_plaquette_links(square_lattice);
  Circuit c = build_from_links(base, square_lattice.n_sites, links, k);
  c.connectivity = Connectivity::all;
  return c;
}

int r3_param_index(const Circuit& circuit, int layer, int qubit, R3Slot slot) {
  if (layer < 0 || layer >= circuit.layers) throw ArgumentError("layer " + std::to_string(layer) + " out of range");
  if (qubit < 0 || qubit >= circuit.qubits) throw ArgumentError("qubit " + std::to_string(qubit) + " out of range");
  return layer * circuit.params_per_layer() + 3 * qubit + static_cast<int>(slot);
}

void apply_gate(const GateInstr& g, double theta, std::span<Complex> amps) noexcept {
  switch (g.kind) {
    case GateKind::rz: kernel::one_qubit(amps, g.q0, rz(theta)); break;
    case GateKind::ry: kernel::one_qubit(amps, g.q0, ry(theta)); break;
    case GateKind::cz: kernel::cz_phase(amps, g.q0, g.q1, std::polar(1.0, theta)); break;
    case GateKind::cx: kernel::cx_phase(amps, g.q0, g.q1, std::polar(1.0, theta)); break;
    case GateKind::rxx: kernel::rpp(amps, g.q0, g.q1, 'X', theta); break;
    case GateKind::ryy: kernel::rpp(amps, g.q0, g.q1, 'Y', theta); break;
    case GateKind::rzz: kernel::rpp(amps, g.q0, g.q1, 'Z', theta); break;
  }
}

void apply_gate_inverse(const GateInstr& g, double theta, std::span<Complex> amps) noexcept {
  apply_gate(g, -theta, amps);
}

namespace {

Matrix2 mul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

void run_circuit(const Circuit& circuit, std::span<const double> params, StateVector& state) {
  if (static_cast<int>(params.size()) != circuit.param_count) {
    throw ShapeError("circuit expects " + std::to_string(circuit.param_count) + " parameters, got " +
                     std::to_string(params.size()));
  }
  if (state.qubit_count() != circuit.qubits) {
    throw ShapeError("circuit acts on " + std::to_string(circuit.qubits) + " qubits, state has " +
                     std::to_string(state.qubit_count()));
  }
  auto amps = state.amplitudes();
  const auto& gates = circuit.gates;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const GateInstr& g = gates[i];
    // Fuse an R3 triple into one 2x2 pass.
    if (g.kind == GateKind::rz && i + 2 < gates.size() && gates[i + 1].kind == GateKind::ry &&
        gates[i + 2].kind == GateKind::rz && gates[i + 1].q0 == g.q0 && gates[i + 2].q0 == g.q0) {
      const Matrix2 u = mul(rz(params[gates[i + 2].param]), mul(ry(params[gates[i + 1].param]), rz(params[g.param])));
      kernel::one_qubit(amps, g.q0, u);
      i += 2;
      continue;
    }
    apply_gate(g, params[g.param], amps);
  }
}

nlohmann::json to_json(const Circuit& circuit) {
  nlohmann::json j;
  j["qubits"] = circuit.qubits;
  j["layers"] = circuit.layers;
  j["ansatz"] = to_string(circuit.kind);
  j["connectivity"] = to_string(circuit.connectivity);
  j["param_count"] = circuit.param_count;
  j["global_gate_count"] = circuit.global_gate_count ? nlohmann::json(*circuit.global_gate_count) : nlohmann::json();
  auto& gates = j["gates"] = nlohmann::json::array();
  for (const auto& g : circuit.gates) {
    nlohmann::json qubits = is_two_qubit(g.kind) ? nlohmann::json{g.q0, g.q1} : nlohmann::json{g.q0};
    gates.push_back({{"kind", to_string(g.kind)}, {"qubits", qubits}, {"param", g.param}});
  }
  auto& layers = j["layer_boundaries"] = nlohmann::json::array();
  for (const auto& r : circuit.layer_boundaries) layers.push_back({r.begin, r.end});
  return j;
}

}  // namespace gg
