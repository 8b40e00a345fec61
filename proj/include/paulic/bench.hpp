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

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "paulic/pauli.hpp"

namespace paulic {

enum class LatticeModel { Ising, Heisenberg };

struct LatticeSpec {
  std::vector<std::size_t> dims;  // 1 to 3 extents, row-major, last fastest
  LatticeModel model = LatticeModel::Ising;
};

/// Nearest-neighbour pairs (a < b), enumerated by site then by dimension.
std::vector<std::pair<Qubit, Qubit>> lattice_edges(const std::vector<std::size_t>& dims);

/// One block per lattice edge: ZZ for Ising, {XX, YY, ZZ} for Heisenberg.
Program gen_lattice(const LatticeSpec& spec);

/// 5 n^2 single-string blocks. Each string acts on m distinct qubits, m
/// uniform in [1, n], with uniform axes; weights are uniform in [-1, 1].
Program gen_random_hamiltonian(std::size_t n, std::uint64_t seed);

struct Graph {
  std::size_t n = 0;
  std::vector<std::pair<Qubit, Qubit>> edges;  // a < b, sorted
  std::vector<double> weights;                 // parallel to edges
};

/// Uniform-ish random d-regular simple graph (pairing model, restarted
/// when it gets stuck). Throws std::invalid_argument if n*d is odd or d >= n.
Graph regular_graph(std::size_t n, std::size_t degree, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// One block with symbolic parameter "gamma" and a ZZ string per edge.
Program gen_qaoa_maxcut(const Graph& g);

/// Gate counts of chain synthesis without cancellation.
struct NaiveCounts {
  std::size_t cnot = 0;
  std::size_t single = 0;

  bool operator==(const NaiveCounts&) const = default;
};

NaiveCounts naive_counts(const Program& p);

}  // namespace paulic
