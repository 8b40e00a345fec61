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
#include <vector>

#include <Eigen/Dense>

#include "paulic/circuit.hpp"
#include "paulic/pauli.hpp"

namespace paulic {

inline constexpr std::size_t kMaxVerifyQubits = 10;

using Unitary = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// 2x2 matrices of the single-qubit gates.
Eigen::Matrix2cd gate_matrix(GateKind kind, double angle = 0.0);

/// Product of the gate matrices, last gate leftmost. Basis bit q is qubit q.
Unitary circuit_unitary(const Circuit& c);

/// cos(angle/2) I - i sin(angle/2) P.
Unitary string_exponential(const PauliString& p, double angle);

/// Product of the rotations, first rotation rightmost.
Unitary rotation_product(std::size_t n_qubits, const std::vector<PauliRotation>& order);

/// Largest entry-wise difference after removing a global phase, which is
/// aligned on the largest-magnitude entry of `expected`.
double unitary_deviation(const Unitary& actual, const Unitary& expected);

/// Deviation of the circuit from the ordered rotations, placed through the
/// circuit's initial and final layouts. Strings shorter than the register
/// are padded with identity on the extra (ancilla) slots.
double check_equivalence(const Circuit& c, const std::vector<PauliRotation>& order);

/// Same, with an identity initial layout and the given final layout.
double check_equivalence(const Circuit& c, const std::vector<PauliRotation>& order,
                         const Layout& final_perm);

}  // namespace paulic
