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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "paulic/pauli.hpp"

namespace paulic {

enum class GateKind { H, GY, GY_DAG, RZ, CNOT, SWAP };

/// GY = S·H, so GY·Z·GY† = Y. GY_DAG is its inverse.
struct Gate {
  GateKind kind = GateKind::H;
  std::array<Qubit, 2> qubits{0, 0};  // (control, target) for CNOT
  double angle = 0.0;                 // RZ only

  static Gate h(Qubit q) { return {GateKind::H, {q, q}, 0.0}; }
  static Gate gy(Qubit q) { return {GateKind::GY, {q, q}, 0.0}; }
  static Gate gy_dag(Qubit q) { return {GateKind::GY_DAG, {q, q}, 0.0}; }
  static Gate rz(Qubit q, double angle) { return {GateKind::RZ, {q, q}, angle}; }
  static Gate cnot(Qubit control, Qubit target);
  static Gate swap(Qubit a, Qubit b);

  bool is_two_qubit() const { return kind == GateKind::CNOT || kind == GateKind::SWAP; }
  std::size_t arity() const { return is_two_qubit() ? 2 : 1; }

  bool operator==(const Gate&) const = default;
};

/// Target rotation exp(-i angle/2 P) in the order a circuit realizes it.
struct PauliRotation {
  PauliString string;
  double angle = 0.0;
};

/// A layout maps logical qubit -> physical slot. Empty means identity.
using Layout = std::vector<Qubit>;

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Throws std::out_of_range for qubits outside the register.
  void append(const Gate& g);
  void append(const Circuit& other);

  // Placement of logical qubits before the first and after the last gate.
  const Layout& initial_layout() const { return initial_layout_; }
  const Layout& final_layout() const { return final_layout_; }
  void set_initial_layout(Layout layout) { initial_layout_ = std::move(layout); }
  void set_final_layout(Layout layout) { final_layout_ = std::move(layout); }

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
  Layout initial_layout_;
  Layout final_layout_;
};

struct GateCounts {
  std::size_t cnot = 0;    // SWAP adds 3
  std::size_t single = 0;  // H, GY, GY_DAG, RZ
  std::size_t total = 0;
  std::size_t swaps = 0;

  bool operator==(const GateCounts&) const = default;
};

GateCounts counts(const Circuit& c);

/// ASAP depth; SWAP occupies three levels.
std::size_t depth(const Circuit& c);

/// Cancels adjacent inverse pairs (CNOT·CNOT, SWAP·SWAP, H·H, GY·GY_DAG) and
/// merges adjacent RZ on a qubit until nothing changes. Layouts are kept.
Circuit peephole_cancel(const Circuit& c);

/// OpenQASM 2.0 listing.
std::string emit_qasm(const Circuit& c);

}  // namespace paulic
