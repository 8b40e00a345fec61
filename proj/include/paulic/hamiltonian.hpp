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

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "paulic/pauli.hpp"

namespace paulic {

/// Largest register for which the dense Hamiltonian oracle is built.
inline constexpr std::size_t kMaxHamiltonianQubits = 12;

/// Sparse action of a Pauli string on computational basis states:
/// P|x> = phase(x) |x ^ flip_mask>. Bit q of a basis index is qubit q.
struct PauliAction {
  std::uint64_t flip_mask = 0;
  std::uint64_t z_mask = 0;  // qubits contributing (-1)^bit
  std::uint64_t y_mask = 0;  // qubits contributing i * (-1)^bit

  /// Coefficient of |x ^ flip_mask> in P|x>.
  std::complex<double> phase(std::uint64_t x) const;
};

PauliAction pauli_action(const PauliString& p);

/// Dense matrix of sigma_{n-1} (x) ... (x) sigma_0.
Eigen::MatrixXcd pauli_matrix(const PauliString& p);

/// Sum over blocks of parameter * sum over strings of weight * P.
/// Throws std::invalid_argument above kMaxHamiltonianQubits and
/// UnboundParameterError for unbound symbols.
Eigen::MatrixXcd hamiltonian_matrix(const Program& program, const Bindings& bindings = {});

}  // namespace paulic
