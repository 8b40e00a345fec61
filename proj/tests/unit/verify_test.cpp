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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "paulic/hamiltonian.hpp"
#include "paulic/synth_ft.hpp"
#include "paulic/verify.hpp"

namespace paulic {
namespace {

using cd = std::complex<double>;
PauliString ps(const char* t) { return PauliString::from_text(t); }

TEST(GateMatrix, Definitions) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  EXPECT_LT((gate_matrix(GateKind::H) - h).norm(), 1e-15);
  // GY Z GY^dag = Y
  Eigen::Matrix2cd z, y;
  z << 1, 0, 0, -1;
  y << 0, cd(0, -1), cd(0, 1), 0;
  const Eigen::Matrix2cd g = gate_matrix(GateKind::GY);
  EXPECT_LT((g * z * g.adjoint() - y).norm(), 1e-15);
  EXPECT_LT((g * gate_matrix(GateKind::GY_DAG) - Eigen::Matrix2cd::Identity()).norm(), 1e-15);
  const Eigen::Matrix2cd rz = gate_matrix(GateKind::RZ, 0.8);
  EXPECT_NEAR(std::abs(rz(0, 0) - std::exp(cd(0, -0.4))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(rz(1, 1) - std::exp(cd(0, 0.4))), 0.0, 1e-15);
}

TEST(CircuitUnitary, Basics) {
  EXPECT_LT((circuit_unitary(Circuit(2)) - Unitary::Identity(4, 4)).norm(), 1e-15);
  Circuit h(1);
  h.append(Gate::h(0));
  const double r = 1.0 / std::sqrt(2.0);
  Unitary expect(2, 2);
  expect << r, r, r, -r;
  EXPECT_LT((circuit_unitary(h) - expect).norm(), 1e-15);
  Circuit cc(2);
  cc.append(Gate::cnot(0, 1));
  cc.append(Gate::cnot(0, 1));
  EXPECT_LT((circuit_unitary(cc) - Unitary::Identity(4, 4)).norm(), 1e-15);
}

TEST(CircuitUnitary, CnotAndSwapPermuteBasis) {
  Circuit c(2);
  c.append(Gate::cnot(0, 1));  // control is bit 0
  const Unitary u = circuit_unitary(c);
  EXPECT_EQ(u(3, 1), cd(1, 0));
  EXPECT_EQ(u(1, 3), cd(1, 0));
  EXPECT_EQ(u(0, 0), cd(1, 0));
  EXPECT_EQ(u(2, 2), cd(1, 0));
  Circuit s(2);
  s.append(Gate::swap(0, 1));
  const Unitary v = circuit_unitary(s);
  EXPECT_EQ(v(2, 1), cd(1, 0));
  EXPECT_EQ(v(1, 2), cd(1, 0));
}

TEST(CircuitUnitary, RejectsLargeRegisters) {
  EXPECT_THROW(circuit_unitary(Circuit(kMaxVerifyQubits + 1)), std::invalid_argument);
}

TEST(StringExponential, Cases) {
  EXPECT_LT((string_exponential(ps("XYZ"), 0.0) - Unitary::Identity(8, 8)).norm(), 1e-15);
  const Unitary z = string_exponential(ps("Z"), 0.6);
  EXPECT_NEAR(std::abs(z(0, 0) - std::exp(cd(0, -0.3))), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(z(1, 1) - std::exp(cd(0, 0.3))), 0.0, 1e-15);
  const Unitary full = string_exponential(ps("XZY"), 2 * std::numbers::pi);
  EXPECT_LT((full + Unitary::Identity(8, 8)).norm(), 1e-14);
}

TEST(StringExponential, MatchesSpectralExponential) {
  // exp(-i a/2 P) from the eigendecomposition of P
  const PauliString p = ps("YXZ");
  const Eigen::MatrixXcd m = pauli_matrix(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  const double a = 0.77;
  Eigen::VectorXcd phases(8);
  for (int i = 0; i < 8; ++i) phases(i) = std::exp(cd(0, -a / 2 * es.eigenvalues()(i)));
  const Eigen::MatrixXcd expect = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  EXPECT_LT((string_exponential(p, a) - expect).norm(), 1e-12);
}

TEST(UnitaryDeviation, IgnoresGlobalPhase) {
  const Unitary u = string_exponential(ps("XY"), 0.4);
  EXPECT_LT(unitary_deviation(u * std::exp(cd(0, 1.3)), u), 1e-14);
  EXPECT_GT(unitary_deviation(string_exponential(ps("XY"), 0.5), u), 1e-3);
  EXPECT_THROW(unitary_deviation(Unitary::Identity(2, 2), u), std::invalid_argument);
}

TEST(CheckEquivalence, SingleStrings) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> axis(0, 3);
  for (int i = 0; i < 20; ++i) {
    PauliString p(5);
    for (Qubit q = 0; q < 5; ++q) p.set(q, static_cast<PauliAxis>(axis(rng)));
    if (p.is_identity()) continue;
    const Circuit c = synth_string(p, 0.9, chain_plan(p));
    EXPECT_LT(check_equivalence(c, {{p, 0.9}}), 1e-10);
  }
}

TEST(CheckEquivalence, DroppedCnotIsCaught) {
  const PauliString p = ps("ZXZY");
  const Circuit c = synth_string(p, 0.9, chain_plan(p));
  Circuit broken(4);
  bool dropped = false;
  for (const auto& g : c.gates()) {
    if (!dropped && g.kind == GateKind::CNOT) {
      dropped = true;
      continue;
    }
    broken.append(g);
  }
  EXPECT_GT(check_equivalence(broken, {{p, 0.9}}), 0.1);
}

TEST(CheckEquivalence, EmptyIsIdentity) { EXPECT_EQ(check_equivalence(Circuit(3), {}), 0.0); }

TEST(CheckEquivalence, AnglePerturbationIsVisible) {
  const PauliString p = ps("XYZZ");
  const Circuit c = synth_string(p, 0.5, chain_plan(p));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.gates()[i].kind != GateKind::RZ) continue;
    Circuit bad(4);
    for (std::size_t k = 0; k < c.size(); ++k) {
      Gate g = c.gates()[k];
      if (k == i) g.angle += 1e-3;
      bad.append(g);
    }
    EXPECT_GE(check_equivalence(bad, {{p, 0.5}}), 1e-4);
  }
}

TEST(CheckEquivalence, FinalPermutation) {
  // a SWAP moves logical 0 to slot 1
  Circuit c(2);
  c.append(Gate::swap(0, 1));
  c.append(Gate::rz(1, 0.3));
  EXPECT_LT(check_equivalence(c, {{ps("IZ"), 0.3}}, {1, 0}), 1e-12);
  EXPECT_GT(check_equivalence(c, {{ps("IZ"), 0.3}}, {0, 1}), 0.1);
}

TEST(CheckEquivalence, PadsShortStrings) {
  Circuit c(3);
  c.append(Gate::rz(0, 0.2));
  EXPECT_LT(check_equivalence(c, {{ps("Z"), 0.2}}), 1e-12);
}

}  // namespace
}  // namespace paulic
