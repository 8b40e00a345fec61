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

#include "paulic/verify.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "paulic/hamiltonian.hpp"

namespace paulic {

namespace {

using cd = std::complex<double>;

void check_size(std::size_t n, const char* what) {
  if (n > kMaxVerifyQubits) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) +
                                " qubits exceeds the verifier limit of " +
                                std::to_string(kMaxVerifyQubits));
  }
}

Unitary identity(std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  return Unitary::Identity(dim, dim);
}

void apply_single(Unitary& u, Qubit q, const Eigen::Matrix2cd& g) {
  const Eigen::Index bit = Eigen::Index{1} << q;
  for (Eigen::Index x = 0; x < u.rows(); ++x) {
    if (x & bit) continue;
    for (Eigen::Index col = 0; col < u.cols(); ++col) {
      const cd a = u(x, col);
      const cd b = u(x | bit, col);
      u(x, col) = g(0, 0) * a + g(0, 1) * b;
      u(x | bit, col) = g(1, 0) * a + g(1, 1) * b;
    }
  }
}

void apply_cnot(Unitary& u, Qubit control, Qubit target) {
  const Eigen::Index c = Eigen::Index{1} << control;
  const Eigen::Index t = Eigen::Index{1} << target;
  for (Eigen::Index x = 0; x < u.rows(); ++x) {
    if ((x & c) && !(x & t)) u.row(x).swap(u.row(x | t));
  }
}

void apply_swap(Unitary& u, Qubit a, Qubit b) {
  const Eigen::Index ba = Eigen::Index{1} << a;
  const Eigen::Index bb = Eigen::Index{1} << b;
  for (Eigen::Index x = 0; x < u.rows(); ++x) {
    if ((x & ba) && !(x & bb)) u.row(x).swap(u.row((x ^ ba) | bb));
  }
}

// u <- exp(-i angle/2 P) u
void apply_rotation(Unitary& u, const PauliString& p, double angle) {
  const PauliAction action = pauli_action(p);
  const double c = std::cos(angle / 2);
  const cd mis = cd(0, -std::sin(angle / 2));
  const auto f = static_cast<Eigen::Index>(action.flip_mask);
  if (f == 0) {
    for (Eigen::Index y = 0; y < u.rows(); ++y) {
      u.row(y) *= c + mis * action.phase(static_cast<std::uint64_t>(y));
    }
    return;
  }
  // (P u)[y] = phase(y ^ f) u[y ^ f]
  for (Eigen::Index y = 0; y < u.rows(); ++y) {
    const Eigen::Index z = y ^ f;
    if (z < y) continue;
    const cd py = action.phase(static_cast<std::uint64_t>(z));  // coefficient into y
    const cd pz = action.phase(static_cast<std::uint64_t>(y));  // coefficient into z
    for (Eigen::Index col = 0; col < u.cols(); ++col) {
      const cd a = u(y, col);
      const cd b = u(z, col);
      u(y, col) = c * a + mis * py * b;
      u(z, col) = c * b + mis * pz * a;
    }
  }
}

PauliString pad(const PauliString& p, std::size_t n) {
  if (p.size() == n) return p;
  if (p.size() > n) throw std::invalid_argument("rotation string longer than the register");
  PauliString out(n);
  for (Qubit q = 0; q < p.size(); ++q) out.set(q, p[q]);
  return out;
}

Layout identity_layout(std::size_t n) {
  Layout l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = i;
  return l;
}

Layout full_layout(const Layout& l, std::size_t n) {
  if (l.empty()) return identity_layout(n);
  if (l.size() != n) throw std::invalid_argument("layout size differs from the register");
  std::vector<bool> seen(n, false);
  for (Qubit p : l) {
    if (p >= n || seen[p]) throw std::invalid_argument("layout is not a permutation");
    seen[p] = true;
  }
  return l;
}

Eigen::Index permute_index(Eigen::Index x, const Layout& l) {
  Eigen::Index y = 0;
  for (std::size_t q = 0; q < l.size(); ++q) {
    if (x & (Eigen::Index{1} << q)) y |= Eigen::Index{1} << l[q];
  }
  return y;
}

double deviation_with_layouts(const Circuit& c, const std::vector<PauliRotation>& order,
                              const Layout& init, const Layout& fin) {
  const std::size_t n = c.n_qubits();
  check_size(n, "check_equivalence");
  std::vector<PauliRotation> padded;
  padded.reserve(order.size());
  for (const auto& r : order) padded.push_back({pad(r.string, n), r.angle});
  const Unitary v = rotation_product(n, padded);
  const Layout li = full_layout(init, n);
  const Layout lf = full_layout(fin, n);
  // expected[pf(x), pi(x')] = v[x, x']
  Unitary expected(v.rows(), v.cols());
  std::vector<Eigen::Index> pi(v.rows()), pf(v.rows());
  for (Eigen::Index x = 0; x < v.rows(); ++x) {
    pi[x] = permute_index(x, li);
    pf[x] = permute_index(x, lf);
  }
  for (Eigen::Index x = 0; x < v.rows(); ++x) {
    for (Eigen::Index x2 = 0; x2 < v.cols(); ++x2) expected(pf[x], pi[x2]) = v(x, x2);
  }
  return unitary_deviation(circuit_unitary(c), expected);
}

}  // namespace

Eigen::Matrix2cd gate_matrix(GateKind kind, double angle) {
  const double r = 1.0 / std::sqrt(2.0);
  const cd i(0, 1);
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::H:
      m << r, r, r, -r;
      break;
    case GateKind::GY:  // S H
      m << r, r, i * r, -i * r;
      break;
    case GateKind::GY_DAG:  // H S^dagger
      m << r, -i * r, r, i * r;
      break;
    case GateKind::RZ:
      m << std::exp(-i * (angle / 2)), 0, 0, std::exp(i * (angle / 2));
      break;
    default:
      throw std::invalid_argument("gate_matrix: two-qubit gate");
  }
  return m;
}

Unitary circuit_unitary(const Circuit& c) {
  check_size(c.n_qubits(), "circuit_unitary");
  Unitary u = identity(c.n_qubits());
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::CNOT:
        apply_cnot(u, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::SWAP:
        apply_swap(u, g.qubits[0], g.qubits[1]);
        break;
      default:
        apply_single(u, g.qubits[0], gate_matrix(g.kind, g.angle));
    }
  }
  return u;
}

Unitary string_exponential(const PauliString& p, double angle) {
  check_size(p.size(), "string_exponential");
  Unitary u = identity(p.size());
  apply_rotation(u, p, angle);
  return u;
}

Unitary rotation_product(std::size_t n_qubits, const std::vector<PauliRotation>& order) {
  check_size(n_qubits, "rotation_product");
  Unitary u = identity(n_qubits);
  for (const auto& r : order) {
    if (r.string.size() != n_qubits) throw std::invalid_argument("rotation length mismatch");
    apply_rotation(u, r.string, r.angle);
  }
  return u;
}

double unitary_deviation(const Unitary& actual, const Unitary& expected) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
    throw std::invalid_argument("unitary_deviation: shape mismatch");
  }
  Eigen::Index br = 0, bc = 0;
  expected.cwiseAbs().maxCoeff(&br, &bc);
  cd phase(1, 0);
  const cd e = expected(br, bc);
  const cd a = actual(br, bc);
  if (std::abs(a) > 0 && std::abs(e) > 0) {
    phase = a / e;
    phase /= std::abs(phase);
  }
  return (actual - phase * expected).cwiseAbs().maxCoeff();
}

double check_equivalence(const Circuit& c, const std::vector<PauliRotation>& order) {
  return deviation_with_layouts(c, order, c.initial_layout(), c.final_layout());
}

double check_equivalence(const Circuit& c, const std::vector<PauliRotation>& order,
                         const Layout& final_perm) {
  return deviation_with_layouts(c, order, {}, final_perm);
}

}  // namespace paulic
