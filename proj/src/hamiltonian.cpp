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

#include "paulic/hamiltonian.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace paulic {

std::complex<double> PauliAction::phase(std::uint64_t x) const {
  // Z|b> = (-1)^b |b>,  Y|b> = i (-1)^b |1-b>.
  const int minus = std::popcount((z_mask | y_mask) & x) & 1;
  const int i_power = std::popcount(y_mask) & 3;
  static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> out = kIPow[i_power];
  return minus ? -out : out;
}

PauliAction pauli_action(const PauliString& p) {
  if (p.size() > 63) throw std::invalid_argument("pauli_action: more than 63 qubits");
  PauliAction a;
  for (Qubit q = 0; q < p.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (p[q]) {
      case PauliAxis::I:
        break;
      case PauliAxis::X:
        a.flip_mask |= bit;
        break;
      case PauliAxis::Y:
        a.flip_mask |= bit;
        a.y_mask |= bit;
        break;
      case PauliAxis::Z:
        a.z_mask |= bit;
        break;
    }
  }
  return a;
}

Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
  if (p.size() > kMaxHamiltonianQubits) {
    throw std::invalid_argument("pauli_matrix: " + std::to_string(p.size()) +
                                " qubits exceeds the oracle limit");
  }
  const std::size_t dim = std::size_t{1} << p.size();
  const PauliAction action = pauli_action(p);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    m(static_cast<Eigen::Index>(col ^ action.flip_mask), static_cast<Eigen::Index>(col)) =
        action.phase(col);
  }
  return m;
}

Eigen::MatrixXcd hamiltonian_matrix(const Program& program, const Bindings& bindings) {
  if (program.n_qubits > kMaxHamiltonianQubits) {
    throw std::invalid_argument("hamiltonian_matrix: " + std::to_string(program.n_qubits) +
                                " qubits exceeds the oracle limit of " +
                                std::to_string(kMaxHamiltonianQubits));
  }
  program.validate();
  const std::size_t dim = std::size_t{1} << program.n_qubits;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& block : program.blocks) {
    const double param = block.parameter.resolve(bindings);
    for (const auto& ws : block.strings) {
      const PauliAction action = pauli_action(ws.string);
      const double coeff = param * ws.weight;
      for (std::uint64_t col = 0; col < dim; ++col) {
        h(static_cast<Eigen::Index>(col ^ action.flip_mask), static_cast<Eigen::Index>(col)) +=
            coeff * action.phase(col);
      }
    }
  }
  return h;
}

}  // namespace paulic
