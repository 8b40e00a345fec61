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

#include "paulic/pauli.hpp"

namespace paulic {

/// One main block plus padding blocks placed on qubits the main block does
/// not touch.
struct Layer {
  PauliBlock main_block;
  std::vector<PauliBlock> padded_blocks;
  // Positions of the blocks in the source program.
  std::size_t main_index = 0;
  std::vector<std::size_t> padded_indices;

  std::size_t block_count() const { return 1 + padded_blocks.size(); }
  /// Main block first, then the padding in placement order.
  std::vector<const PauliBlock*> blocks() const;
};

struct Schedule {
  std::size_t n_qubits = 0;
  std::vector<Layer> layers;
  /// Source indices of blocks with no active qubit; they only contribute a
  /// global phase and are not scheduled.
  std::vector<std::size_t> dropped;

  /// Program whose block order is the schedule order.
  Program flatten() const;
  std::size_t block_count() const;
};

/// Copy of `block` with its strings stably sorted by lex_compare.
PauliBlock sort_strings(const PauliBlock& block);

/// Gate-count-oriented order: strings sorted inside each block, blocks
/// sorted by their first string, one block per layer.
Schedule gco_schedule(const Program& program);

/// Closed-form depth estimate of the naive synthesis of a block:
/// sum over strings of 2(k-1)+1, plus 2 when the string has an X or Y axis.
std::size_t estimate_depth(const PauliBlock& block);

/// Positions where both strings carry the same non-identity axis.
std::size_t string_overlap(const PauliString& a, const PauliString& b);

/// string_overlap between `tail` and the first string of `block`.
std::size_t overlap(const PauliString& tail, const PauliBlock& block);

/// Depth-oriented layering. Blocks are sorted by active length (descending,
/// then lexicographically); each layer's main block maximizes the overlap
/// with the previous main block's last string, and is padded with later
/// blocks that avoid its qubits while the padding's critical path stays
/// within the main block's estimated depth.
Schedule do_schedule(const Program& program);

}  // namespace paulic
