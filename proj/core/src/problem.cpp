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

#include "gg/problem.hpp"

#include <charconv>
#include <string>

#include "gg/error.hpp"

namespace gg {

namespace {

int parse_positive(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 1) {
    throw ArgumentError("malformed lattice '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

LatticeSpec parse_lattice_spec(std::string_view text) {
  std::string_view body = text;
  bool toric = false;
  if (!body.empty() && body.back() == 'p') {
    toric = true;
    body.remove_suffix(1);
  }
  const auto x = body.find('x');
  if (x == std::string_view::npos) {
    if (toric) throw ArgumentError("malformed lattice '" + std::string(text) + "'");
    return {LatticeKind::chain, 1, parse_positive(body, text)};
  }
  const int r = parse_positive(body.substr(0, x), text);
  const int c = parse_positive(body.substr(x + 1), text);
  return {toric ? LatticeKind::toric_edge : LatticeKind::square, r, c};
}

std::string to_string(const LatticeSpec& spec) {
  switch (spec.kind) {
    case LatticeKind::chain: return std::to_string(spec.cols);
    case LatticeKind::square: return std::to_string(spec.rows) + "x" + std::to_string(spec.cols);
    case LatticeKind::toric_edge: return std::to_string(spec.rows) + "x" + std::to_string(spec.cols) + "p";
  }
  return "?";
}

Lattice build_lattice(const LatticeSpec& spec) {
  switch (spec.kind) {
    case LatticeKind::chain: return build_chain(spec.cols);
    case LatticeKind::square: return build_square(spec.rows, spec.cols);
    case LatticeKind::toric_edge: return build_toric_edge(spec.rows, spec.cols);
  }
  throw ArgumentError("unknown lattice kind");
}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::toric: return "toric";
    case ModelKind::heisenberg: return "heisenberg";
    case ModelKind::z_probe: return "zprobe";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "toric") return ModelKind::toric;
  if (name == "heisenberg") return ModelKind::heisenberg;
  if (name == "zprobe" || name == "z_probe") return ModelKind::z_probe;
  throw ArgumentError("unknown model '" + std::string(name) + "' (expected toric, heisenberg or zprobe)");
}

PauliSum build_hamiltonian(const ModelSpec& model, const Lattice& lattice) {
  switch (model.kind) {
    case ModelKind::toric: return toric_code_hamiltonian(lattice, model.h);
    case ModelKind::heisenberg:
      if (lattice.kind != LatticeKind::square) throw ArgumentError("Heisenberg model needs a square lattice");
      return heisenberg_j1j2(lattice.rows, lattice.cols, model.j2);
    case ModelKind::z_probe: return z_probe(lattice.n_sites, lattice.n_sites - 1);
  }
  throw ArgumentError("unknown model kind");
}

Circuit build_circuit(const AnsatzSpec& spec, const Lattice& lattice) {
  if (spec.connectivity == Connectivity::all) return build_all_variant(lattice, spec.layers, spec.kind);
  return build_ansatz(spec.kind, lattice, spec.layers);
}

Problem build_problem(const LatticeSpec& lattice_spec, const AnsatzSpec& ansatz, const ModelSpec& model,
                      std::optional<RegionSpec> regions) {
  Lattice lattice = build_lattice(lattice_spec);
  Circuit circuit = build_circuit(ansatz, lattice);
  PauliSum hamiltonian = build_hamiltonian(model, lattice);
  if (regions) validate(*regions, lattice.n_sites);
  return Problem{std::move(lattice), std::move(circuit), std::move(hamiltonian), std::move(regions)};
}

}  // namespace gg
