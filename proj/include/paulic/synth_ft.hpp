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
#include <utility>
#include <vector>

#include "paulic/circuit.hpp"
#include "paulic/pauli.hpp"
#include "paulic/schedule.hpp"

namespace paulic {

/// CNOT(child, parent) in the left tree.
struct TreeEdge {
  Qubit child = 0;
  Qubit parent = 0;

  bool operator==(const TreeEdge&) const = default;
};

/// Spanning tree over a string's support, edges listed leaves-to-root.
struct TreePlan {
  std::vector<TreeEdge> edges;
  Qubit root = 0;

  bool operator==(const TreePlan&) const = default;
};

/// Chain over the support in ascending order, rooted at the highest qubit.
TreePlan chain_plan(const PauliString& p);

/// Plan starting with `prefix` (a forest over part of the support). The
/// remaining support qubits (ascending) and then the forest roots
/// (ascending) are chained; the last of them is the root.
TreePlan plan_with_prefix(const PauliString& p, const std::vector<TreeEdge>& prefix);

/// Throws std::invalid_argument unless `plan` is a leaves-to-root spanning
/// tree of support(p).
void validate_plan(const PauliString& p, const TreePlan& plan);

/// Basis change, left tree, RZ(angle) on the root, mirrored tree, basis
/// change back. Realizes exp(-i angle/2 P).
Circuit synth_string(const PauliString& p, double angle, const TreePlan& plan);

/// Qubits on which the last string of `first` and the first string of
/// `second` that act there carry the same non-identity axis.
std::size_t layer_overlap(const Layer& first, const Layer& second);

struct LayerPairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, i + 1)
  std::vector<std::size_t> leftovers;
};

/// Greedy pairing of neighbouring layers by layer_overlap; ties go to the
/// earlier pair.
LayerPairing pair_layers(const Schedule& s);

/// Emission order of a block's strings.
struct StringGroup {
  std::size_t first = 0;
  std::optional<std::size_t> second;
};

/// Greedy maximum-overlap matching among the strings of `block` not listed
/// in `reserved`. Pairs need a positive overlap; ties go to lower indices.
/// Groups are ordered by their smallest index.
std::vector<StringGroup> most_overlap_sort(const PauliBlock& block,
                                           const std::vector<std::size_t>& reserved = {});

struct SynthesisResult {
  Circuit circuit;
  std::vector<PauliRotation> order;  // rotations in emitted order
};

/// Cancellation-aware synthesis for an all-to-all device.
SynthesisResult ft_synthesize(const Schedule& s, const Bindings& bindings = {});

/// Chain trees in schedule order, no cancellation.
SynthesisResult naive_synthesize(const Schedule& s, const Bindings& bindings = {});

}  // namespace paulic
