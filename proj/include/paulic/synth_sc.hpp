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
#include <optional>
#include <vector>

#include "paulic/circuit.hpp"
#include "paulic/device.hpp"
#include "paulic/pauli.hpp"
#include "paulic/schedule.hpp"
#include "paulic/synth_ft.hpp"

namespace paulic {

/// Bijection between logical qubits and physical slots of a device. It
/// covers every physical slot; logical indices past the program's qubit
/// count stand for idle (ancilla) slots.
class Mapping {
 public:
  Mapping() = default;
  /// Throws std::invalid_argument unless `to_physical` is a permutation.
  explicit Mapping(std::vector<Qubit> to_physical);
  static Mapping identity(std::size_t n);

  std::size_t size() const { return to_phys_.size(); }
  Qubit physical(Qubit logical) const { return to_phys_.at(logical); }
  Qubit logical(Qubit physical) const { return to_log_.at(physical); }
  const std::vector<Qubit>& layout() const { return to_phys_; }

  /// Exchanges the logical qubits held by two physical slots.
  void swap_physical(Qubit a, Qubit b);

  bool operator==(const Mapping&) const = default;

 private:
  std::vector<Qubit> to_phys_;
  std::vector<Qubit> to_log_;
};

/// Greedy dense placement: seed at the highest-degree qubit, grow by the
/// qubit with most couplings into the chosen set (ties to lower index),
/// number the chosen qubits in BFS order from the seed.
Mapping initial_mapping(const DeviceModel& d, std::size_t n_logical);

/// Tree over physical qubits; every edge is a coupling.
struct EmbeddedTree {
  Qubit root = 0;
  std::vector<Qubit> nodes;                  // BFS order from the root
  std::vector<std::optional<Qubit>> parent;  // per physical qubit
  std::vector<std::size_t> depth;            // per physical qubit
  std::vector<Qubit> hosted;                 // logical qubits on the nodes

  bool contains(Qubit physical) const;
};

struct BlockTree {
  EmbeddedTree tree;
  std::vector<Gate> swaps;
  Mapping mapping;  // after the swaps
};

/// Chooses the root among the block's core qubits and pulls every active
/// qubit next to the growing tree along cheapest paths. While the tree is
/// the root alone, the two ends may meet part way; `lookahead` (blocks due
/// soon) decides where.
BlockTree build_block_tree(const PauliBlock& b, const Mapping& m, const DeviceModel& d,
                           const QubitSet& prev_core = {},
                           const std::vector<const PauliBlock*>& lookahead = {});

/// Appends one string on tree `t`. Parity flows leaves to root: a live
/// node CNOTs into a live parent and swaps into an idle one. The rotation
/// sits where the parity meets. Swaps that only move a qubit before it has
/// interacted stay applied and update `m`; everything else is mirrored.
void sc_synthesize_string(const PauliString& p, double angle, const EmbeddedTree& t, Mapping& m,
                          Circuit& out);

/// Appends the strings of `b` on tree `t`, each time taking the pending
/// string whose qubits are closest together (ties to lower index).
/// Rotations are appended to `order`.
void sc_synthesize_block(const PauliBlock& b, const EmbeddedTree& t, Mapping& m,
                         const DeviceModel& d, const Bindings& bindings, Circuit& out,
                         std::vector<PauliRotation>& order);

struct ScOptions {
  std::optional<Mapping> initial;
  /// Upcoming blocks consulted when placing a two-ended move; 0 disables.
  std::size_t lookahead = 16;
};

/// Layer by layer: main block first, padding blocks whose routing keeps
/// off the main tree run alongside, the rest is deferred and compiled last
/// in order of increasing spread. The circuit acts on physical qubits and
/// records initial and final layouts.
SynthesisResult sc_synthesize(const Schedule& s, const DeviceModel& d,
                              const Bindings& bindings = {}, const ScOptions& options = {});

/// Baseline router: before every CNOT on non-adjacent qubits, the control
/// walks along the cheapest path until it is next to the target.
Circuit naive_route(const Circuit& c, const DeviceModel& d,
                    const std::optional<Mapping>& initial = std::nullopt);

}  // namespace paulic
