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

#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace gg {

enum class LatticeKind { chain, square, toric_edge };

std::string_view to_string(LatticeKind kind);

struct Coord {
  int row = 0;
  int col = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Two-qubit gate location. `ordinal` is the 1-based position in the
/// application order; for CX-type gates `a` is the control.
struct Link {
  int a = 0;
  int b = 0;
  int ordinal = 0;
  friend bool operator==(const Link&, const Link&) = default;
};

/// Sites plus the ordered link list that fixes the two-qubit gate order.
///
/// chain:      rows = 1, cols = n.
/// square:     rows x cols sites, site (r, c) has index r * cols + c.
/// toric_edge: rows x cols plaquettes; qubits sit on the edges of the
///             (rows+1) x (cols+1) vertex grid. Edges are numbered row by
///             row: the horizontal edges of vertex row r, then the vertical
///             edges hanging below it. Coordinates are doubled, so a
///             horizontal edge (r, c) sits at (2r, 2c+1) and a vertical edge
///             at (2r+1, 2c).
///
/// `plaquettes` holds the four corner sites (square: top-left, top-right,
/// bottom-left, bottom-right) or the four boundary edges (toric: top, right,
/// bottom, left). `vertices` is populated for toric_edge only.
struct Lattice {
  LatticeKind kind = LatticeKind::chain;
  int rows = 0;
  int cols = 0;
  int n_sites = 0;
  std::vector<Coord> coords;
  std::vector<Link> links;
  std::vector<std::vector<int>> plaquettes;
  std::vector<std::vector<int>> vertices;

  int link_count() const noexcept { return static_cast<int>(links.size()); }
  friend bool operator==(const Lattice&, const Lattice&) = default;
};

Lattice build_chain(int n);
Lattice build_square(int rows, int cols);
Lattice build_toric_edge(int plaquette_rows, int plaquette_cols);

struct LinkParity {
  std::vector<Link> odd;   // ordinals 1, 3, 5, ...: the CZ group of GZX_H
  std::vector<Link> even;  // ordinals 2, 4, 6, ...: the CX group
};

/// Splits links by ordinal parity, preserving order. On a chain this is the
/// pair rule {(k, k+1) | k even} / {(k, k+1) | k odd}.
LinkParity link_parity(const Lattice& lattice);

/// For square lattices: every pair among each plaquette's four corners,
/// plaquettes row-major, pairs already emitted by an earlier plaquette
/// skipped, ordinals renumbered from 1. Order within a plaquette is the four
/// edges (left, top, right, bottom) followed by the two diagonals.
std::vector<Link> all_to_all_plaquette_links(const Lattice& lattice);

/// Largest number of links touching any one site.
int max_site_degree(const Lattice& lattice);
int max_site_degree(int n_sites, const std::vector<Link>& links);

nlohmann::json to_json(const Lattice& lattice);

}  // namespace gg
