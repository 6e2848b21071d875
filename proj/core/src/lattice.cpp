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

#include "gg/lattice.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "gg/error.hpp"

namespace gg {

std::string_view to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::chain: return "chain";
    case LatticeKind::square: return "square";
    case LatticeKind::toric_edge: return "toric_edge";
  }
  return "unknown";
}

Lattice build_chain(int n) {
  if (n < 2) throw SizeError("chain needs at least 2 sites, got " + std::to_string(n));
  Lattice lat;
  lat.kind = LatticeKind::chain;
  lat.rows = 1;
  lat.cols = n;
  lat.n_sites = n;
  for (int i = 0; i < n; ++i) lat.coords.push_back({0, i});
  for (int i = 0; i + 1 < n; ++i) lat.links.push_back({i, i + 1, i + 1});
  return lat;
}

Lattice build_square(int rows, int cols) {
  if (rows < 2 || cols < 2) {
    throw SizeError("square lattice needs at least 2x2 sites, got " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  Lattice lat;
  lat.kind = LatticeKind::square;
  lat.rows = rows;
  lat.cols = cols;
  lat.n_sites = rows * cols;
  auto site = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) lat.coords.push_back({r, c});

  // Row-major sweep; at each site the bottom neighbour first, then the right.
  int ordinal = 1;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (r + 1 < rows) lat.links.push_back({site(r, c), site(r + 1, c), ordinal++});
      if (c + 1 < cols) lat.links.push_back({site(r, c), site(r, c + 1), ordinal++});
    }
  }
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c)
      lat.plaquettes.push_back({site(r, c), site(r, c + 1), site(r + 1, c), site(r + 1, c + 1)});
  return lat;
}

Lattice build_toric_edge(int plaquette_rows, int plaquette_cols) {
  if (plaquette_rows < 1 || plaquette_cols < 1) {
    throw SizeError("toric lattice needs at least 1x1 plaquettes, got " + std::to_string(plaquette_rows) + "x" +
                    std::to_string(plaquette_cols));
  }
  const int pr = plaquette_rows, pc = plaquette_cols;
  Lattice lat;
  lat.kind = LatticeKind::toric_edge;
  lat.rows = pr;
  lat.cols = pc;

  std::vector<std::vector<int>> horizontal(pr + 1, std::vector<int>(pc));
  std::vector<std::vector<int>> vertical(pr, std::vector<int>(pc + 1));
  int q = 0;
  for (int r = 0; r <= pr; ++r) {
    for (int c = 0; c < pc; ++c) {
      horizontal[r][c] = q++;
      lat.coords.push_back({2 * r, 2 * c + 1});
    }
    if (r < pr) {
      for (int c = 0; c <= pc; ++c) {
        vertical[r][c] = q++;
        lat.coords.push_back({2 * r + 1, 2 * c});
      }
    }
  }
  lat.n_sites = q;

  // Rhombus per plaquette: top -> right -> bottom -> left -> top.
  int ordinal = 1;
  for (int r = 0; r < pr; ++r) {
    for (int c = 0; c < pc; ++c) {
      const int top = horizontal[r][c];
      const int bottom = horizontal[r + 1][c];
      const int left = vertical[r][c];
      const int right = vertical[r][c + 1];
      lat.plaquettes.push_back({top, right, bottom, left});
      lat.links.push_back({top, right, ordinal++});
      lat.links.push_back({right, bottom, ordinal++});
      lat.links.push_back({bottom, left, ordinal++});
      lat.links.push_back({left, top, ordinal++});
    }
  }

  for (int r = 0; r <= pr; ++r) {
    for (int c = 0; c <= pc; ++c) {
      std::vector<int> star;
      if (r > 0) star.push_back(vertical[r - 1][c]);
      if (c > 0) star.push_back(horizontal[r][c - 1]);
      if (c < pc) star.push_back(horizontal[r][c]);
      if (r < pr) star.push_back(vertical[r][c]);
      std::sort(star.begin(), star.end());
      lat.vertices.push_back(std::move(star));
    }
  }
  return lat;
}

LinkParity link_parity(const Lattice& lattice) {
  LinkParity parity;
  for (const Link& l : lattice.links) (l.ordinal % 2 == 1 ? parity.odd : parity.even).push_back(l);
  return parity;
}

std::vector<Link> all_to_all_plaquette_links(const Lattice& lattice) {
  if (lattice.kind != LatticeKind::square) {
    throw ArgumentError("all-to-all plaquette links need a square lattice, got " + std::string(to_string(lattice.kind)));
  }
  std::vector<Link> out;
  std::set<std::pair<int, int>> seen;
  int ordinal = 1;
  for (const auto& p : lattice.plaquettes) {
    const int tl = p[0], tr = p[1], bl = p[2], br = p[3];
    const std::pair<int, int> pairs[6] = {{tl, bl}, {tl, tr}, {tr, br}, {bl, br}, {tl, br}, {tr, bl}};
    for (auto [a, b] : pairs) {
      const auto key = std::minmax(a, b);
      if (!seen.insert({key.first, key.second}).second) continue;
      out.push_back({a, b, ordinal++});
    }
  }
  return out;
}

int max_site_degree(int n_sites, const std::vector<Link>& links) {
  std::vector<int> degree(n_sites, 0);
  for (const Link& l : links) {
    ++degree[l.a];
    ++degree[l.b];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

int max_site_degree(const Lattice& lattice) { return max_site_degree(lattice.n_sites, lattice.links); }

nlohmann::json to_json(const Lattice& lattice) {
  nlohmann::json j;
  j["kind"] = to_string(lattice.kind);
  j["rows"] = lattice.rows;
  j["cols"] = lattice.cols;
  j["n_sites"] = lattice.n_sites;
  auto& coords = j["coords"] = nlohmann::json::array();
  for (const auto& c : lattice.coords) coords.push_back({c.row, c.col});
  auto& links = j["links"] = nlohmann::json::array();
  for (const auto& l : lattice.links) links.push_back({{"a", l.a}, {"b", l.b}, {"ordinal", l.ordinal}});
  j["plaquettes"] = lattice.plaquettes;
  j["vertices"] = lattice.vertices;
  return j;
}

}  // namespace gg
