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

#include "paulic/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace paulic {

Gate Gate::cnot(Qubit control, Qubit target) {
  if (control == target) throw std::invalid_argument("cnot: control equals target");
  return {GateKind::CNOT, {control, target}, 0.0};
}

Gate Gate::swap(Qubit a, Qubit b) {
  if (a == b) throw std::invalid_argument("swap: identical qubits");
  return {GateKind::SWAP, {a, b}, 0.0};
}

void Circuit::append(const Gate& g) {
  for (std::size_t i = 0; i < g.arity(); ++i) {
    if (g.qubits[i] >= n_qubits_) {
      throw std::out_of_range("gate qubit " + std::to_string(g.qubits[i]) +
                              " outside register of " + std::to_string(n_qubits_));
    }
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  for (const auto& g : other.gates()) append(g);
}

GateCounts counts(const Circuit& c) {
  GateCounts out;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        ++out.cnot;
        break;
      case GateKind::SWAP:
        out.cnot += 3;
        ++out.swaps;
        break;
      default:
        ++out.single;
    }
  }
  out.total = out.cnot + out.single;
  return out;
}

std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> level(c.n_qubits(), 0);
  std::size_t d = 0;
  for (const auto& g : c.gates()) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < g.arity(); ++i) start = std::max(start, level[g.qubits[i]]);
    const std::size_t end = start + (g.kind == GateKind::SWAP ? 3 : 1);
    for (std::size_t i = 0; i < g.arity(); ++i) level[g.qubits[i]] = end;
    d = std::max(d, end);
  }
  return d;
}

namespace {

bool negligible_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double r = std::remainder(a, two_pi);
  return std::abs(r) <= 1e-12;
}

bool same_pair(const Gate& a, const Gate& b) {
  if (a.kind == GateKind::SWAP) {
    return (a.qubits[0] == b.qubits[0] && a.qubits[1] == b.qubits[1]) ||
           (a.qubits[0] == b.qubits[1] && a.qubits[1] == b.qubits[0]);
  }
  return a.qubits == b.qubits;
}

bool cancels(const Gate& a, const Gate& b) {
  switch (a.kind) {
    case GateKind::H:
      return b.kind == GateKind::H;
    case GateKind::GY:
      return b.kind == GateKind::GY_DAG;
    case GateKind::GY_DAG:
      return b.kind == GateKind::GY;
    case GateKind::CNOT:
    case GateKind::SWAP:
      return b.kind == a.kind && same_pair(a, b);
    case GateKind::RZ:
      return false;
  }
  return false;
}

// One sweep. Each qubit keeps a stack of indices of live gates touching it;
// a gate is adjacent to the previous one only when that gate tops the stacks
// of all its qubits.
bool sweep(std::vector<std::optional<Gate>>& gates, std::size_t n) {
  bool changed = false;
  std::vector<std::vector<std::size_t>> stacks(n);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!gates[i]) continue;
    Gate& g = *gates[i];
    if (g.kind == GateKind::RZ && negligible_angle(g.angle)) {
      gates[i].reset();
      changed = true;
      continue;
    }
    const Qubit q0 = g.qubits[0];
    std::optional<std::size_t> prev;
    if (!stacks[q0].empty()) {
      const std::size_t top = stacks[q0].back();
      bool on_top = true;
      for (std::size_t k = 1; k < g.arity(); ++k) {
        const auto& s = stacks[g.qubits[k]];
        if (s.empty() || s.back() != top) on_top = false;
      }
      // the candidate must also act on exactly the same qubits
      if (on_top && gates[top]->arity() == g.arity()) prev = top;
    }
    if (prev) {
      Gate& p = *gates[*prev];
      if (cancels(p, g)) {
        for (std::size_t k = 0; k < g.arity(); ++k) stacks[g.qubits[k]].pop_back();
        gates[*prev].reset();
        gates[i].reset();
        changed = true;
        continue;
      }
      if (p.kind == GateKind::RZ && g.kind == GateKind::RZ) {
        p.angle += g.angle;
        gates[i].reset();
        changed = true;
        if (negligible_angle(p.angle)) {
          stacks[q0].pop_back();
          gates[*prev].reset();
        }
        continue;
      }
    }
    for (std::size_t k = 0; k < g.arity(); ++k) stacks[g.qubits[k]].push_back(i);
  }
  if (changed) {
    gates.erase(std::remove_if(gates.begin(), gates.end(),
                               [](const std::optional<Gate>& g) { return !g; }),
                gates.end());
  }
  return changed;
}

}  // namespace

Circuit peephole_cancel(const Circuit& c) {
  std::vector<std::optional<Gate>> gates(c.gates().begin(), c.gates().end());
  while (sweep(gates, c.n_qubits())) {
  }
  Circuit out(c.n_qubits());
  for (const auto& g : gates) out.append(*g);
  out.set_initial_layout(c.initial_layout());
  out.set_final_layout(c.final_layout());
  return out;
}

namespace {

std::string format_angle(double a) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, a);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string emit_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n_qubits() << "];\n";
  for (const auto& g : c.gates()) {
    const Qubit a = g.qubits[0];
    const Qubit b = g.qubits[1];
    switch (g.kind) {
      case GateKind::H:
        os << "h q[" << a << "];\n";
        break;
      case GateKind::GY:
        os << "h q[" << a << "]; s q[" << a << "]; // gy\n";
        break;
      case GateKind::GY_DAG:
        os << "sdg q[" << a << "]; h q[" << a << "]; // gydg\n";
        break;
      case GateKind::RZ:
        os << "rz(" << format_angle(g.angle) << ") q[" << a << "];\n";
        break;
      case GateKind::CNOT:
        os << "cx q[" << a << "],q[" << b << "];\n";
        break;
      case GateKind::SWAP:
        os << "swap q[" << a << "],q[" << b << "];\n";
        break;
    }
  }
  return os.str();
}

}  // namespace paulic
