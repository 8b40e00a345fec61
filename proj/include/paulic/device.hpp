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
#include <string>
#include <string_view>
#include <vector>

#include "paulic/pauli.hpp"

namespace paulic {

/// Undirected coupling with its two-qubit gate error rate.
struct Coupling {
  Qubit a = 0;
  Qubit b = 0;
  double error = 0.0;
};

class DeviceModel {
 public:
  DeviceModel() = default;
  /// Throws std::invalid_argument for out-of-range or repeated edges, error
  /// rates outside [0, 1), or a disconnected graph.
  DeviceModel(std::size_t n_qubits, std::vector<Coupling> edges,
              std::vector<double> single_error = {}, std::string name = {});

  /// {"qubits": N, "edges": [{"a":i,"b":j,"error":e}, ...], "single_error": [...]}
  static DeviceModel from_json(std::string_view text);
  static DeviceModel load(const std::string& path);
  /// linear:<n>, grid:<r>x<c>, full:<n> or manhattan65.
  static DeviceModel builtin(std::string_view name);
  /// Built-in name if it parses as one, otherwise a JSON file path.
  static DeviceModel resolve(const std::string& spec);

  std::size_t n_qubits() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<Coupling>& edges() const { return edges_; }
  const std::vector<double>& single_error() const { return single_error_; }
  /// Sorted neighbour list.
  const std::vector<Qubit>& neighbors(Qubit q) const { return adj_.at(q); }
  std::size_t degree(Qubit q) const { return adj_.at(q).size(); }
  bool has_edge(Qubit a, Qubit b) const;
  /// -ln(1 - error); throws std::out_of_range without an edge.
  double edge_cost(Qubit a, Qubit b) const;
  /// Hop count in the coupling graph.
  std::size_t distance(Qubit a, Qubit b) const { return hops_.at(a).at(b); }
  /// Total edge_cost of a cheapest path.
  double path_cost(Qubit a, Qubit b) const { return path_cost_.at(a).at(b); }

 private:
  std::size_t n_ = 0;
  std::string name_;
  std::vector<Coupling> edges_;
  std::vector<double> single_error_;
  std::vector<std::vector<Qubit>> adj_;
  std::vector<std::vector<double>> cost_;  // dense, infinity without an edge
  std::vector<std::vector<std::size_t>> hops_;
  std::vector<std::vector<double>> path_cost_;
};

/// Minimum total edge_cost path from a to b, both ends included. Among
/// equal-cost paths the lexicographically smallest vertex sequence wins.
std::vector<Qubit> cheapest_path(const DeviceModel& d, Qubit a, Qubit b);

}  // namespace paulic
