// Copyright 2026 The paulic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paulic/bench.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "paulic/log.hpp"

namespace paulic {

namespace {

PauliString two_site(std::size_t n, Qubit a, Qubit b, PauliAxis axis) {
  PauliString s(n);
  s.set(a, axis);
  s.set(b, axis);
  return s;
}

}  // namespace

std::vector<std::pair<Qubit, Qubit>> lattice_edges(const std::vector<std::size_t>& dims) {
  if (dims.empty() || dims.size() > 3) throw std::invalid_argument("lattice needs 1 to 3 dims");
  std::size_t n = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw std::invalid_argument("lattice extent must be positive");
    n *= d;
  }
  if (n < 2) throw std::invalid_argument("lattice needs at least 2 sites");
  std::vector<std::size_t> stride(dims.size(), 1);
  for (std::size_t k = dims.size() - 1; k > 0; --k) stride[k - 1] = stride[k] * dims[k];
  std::vector<std::pair<Qubit, Qubit>> edges;
  for (Qubit site = 0; site < n; ++site) {
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t coord = (site / stride[k]) % dims[k];
      if (coord + 1 < dims[k]) edges.emplace_back(site, site + stride[k]);
    }
  }
  return edges;
}

Program gen_lattice(const LatticeSpec& spec) {
  const auto edges = lattice_edges(spec.dims);
  Program p;
  p.n_qubits = 1;
  for (std::size_t d : spec.dims) p.n_qubits *= d;
  for (const auto& [a, b] : edges) {
    PauliBlock block;
    block.parameter = Parameter::literal(1.0);
    if (spec.model == LatticeModel::Heisenberg) {
      block.strings.push_back({two_site(p.n_qubits, a, b, PauliAxis::X), 1.0});
      block.strings.push_back({two_site(p.n_qubits, a, b, PauliAxis::Y), 1.0});
    }
    block.strings.push_back({two_site(p.n_qubits, a, b, PauliAxis::Z), 1.0});
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Program gen_random_hamiltonian(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random Hamiltonian needs at least 1 qubit");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_m(1, n);
  std::uniform_int_distribution<int> pick_axis(1, 3);
  std::uniform_real_distribution<double> pick_weight(-1.0, 1.0);
  Program p;
  p.n_qubits = n;
  std::vector<Qubit> qubits(n);
  for (std::size_t k = 0; k < 5 * n * n; ++k) {
    const std::size_t m = pick_m(rng);
    for (Qubit q = 0; q < n; ++q) qubits[q] = q;
    PauliString s(n);
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(qubits[i], qubits[pick(rng)]);
      s.set(qubits[i], static_cast<PauliAxis>(pick_axis(rng)));
    }
    PauliBlock block;
    block.parameter = Parameter::literal(1.0);
    block.strings.push_back({std::move(s), pick_weight(rng)});
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Graph regular_graph(std::size_t n, std::size_t degree, std::uint64_t seed) {
  if ((n * degree) % 2 != 0) {
    throw std::invalid_argument("regular graph needs n * degree even");
  }
  if (degree >= n && !(n == 0 || degree == 0)) {
    throw std::invalid_argument("regular graph degree must be below n");
  }
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<Qubit> points;
    for (Qubit v = 0; v < n; ++v) points.insert(points.end(), degree, v);
    std::set<std::pair<Qubit, Qubit>> edges;
    auto suitable = [&](Qubit a, Qubit b) {
      return a != b && !edges.count({std::min(a, b), std::max(a, b)});
    };
    bool stuck = false;
    while (!points.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
      std::size_t i = pick(rng), j = pick(rng);
      std::size_t tries = 0;
      while (i == j || !suitable(points[i], points[j])) {
        if (++tries > 64 * points.size()) break;
        i = pick(rng);
        j = pick(rng);
      }
      if (i == j || !suitable(points[i], points[j])) {
        // give up only if no suitable pair is left at all
        bool any = false;
        for (std::size_t x = 0; x < points.size() && !any; ++x) {
          for (std::size_t y = x + 1; y < points.size() && !any; ++y) {
            any = suitable(points[x], points[y]);
          }
        }
        if (!any) {
          stuck = true;
          break;
        }
        continue;
      }
      const Qubit a = points[i], b = points[j];
      edges.insert({std::min(a, b), std::max(a, b)});
      if (i < j) std::swap(i, j);
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(j));
    }
    if (stuck) continue;
    Graph g;
    g.n = n;
    g.edges.assign(edges.begin(), edges.end());
    g.weights.assign(g.edges.size(), 1.0);
    return g;
  }
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g;
  g.n = n;
  for (Qubit a = 0; a < n; ++a) {
    for (Qubit b = a + 1; b < n; ++b) {
      if (coin(rng)) g.edges.emplace_back(a, b);
    }
  }
  g.weights.assign(g.edges.size(), 1.0);
  return g;
}

Program gen_qaoa_maxcut(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("graph has no vertices");
  if (g.weights.size() != g.edges.size()) {
    throw std::invalid_argument("graph weights do not match its edges");
  }
  Program p;
  p.n_qubits = g.n;
  PauliBlock block;
  block.parameter = Parameter::symbol("gamma");
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [a, b] = g.edges[e];
    if (a >= g.n || b >= g.n || a == b) throw std::invalid_argument("bad graph edge");
    block.strings.push_back({two_site(g.n, a, b, PauliAxis::Z), g.weights[e]});
  }
  if (block.strings.empty()) warn("graph has no edges; the QAOA block is empty");
  p.blocks.push_back(std::move(block));
  return p;
}

NaiveCounts naive_counts(const Program& p) {
  NaiveCounts c;
  for (const auto& b : p.blocks) {
    for (const auto& ws : b.strings) {
      const std::size_t k = ws.string.weight();
      if (k == 0) continue;
      c.cnot += 2 * (k - 1);
      c.single += 1;
      for (PauliAxis a : ws.string.axes()) {
        if (a == PauliAxis::X || a == PauliAxis::Y) c.single += 2;
      }
    }
  }
  return c;
}

}  // namespace paulic
