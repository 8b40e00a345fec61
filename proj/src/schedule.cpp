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

#include "paulic/schedule.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "paulic/log.hpp"

namespace paulic {

std::vector<const PauliBlock*> Layer::blocks() const {
  std::vector<const PauliBlock*> out;
  out.reserve(block_count());
  out.push_back(&main_block);
  for (const auto& b : padded_blocks) out.push_back(&b);
  return out;
}

Program Schedule::flatten() const {
  Program p;
  p.n_qubits = n_qubits;
  for (const auto& layer : layers) {
    for (const PauliBlock* b : layer.blocks()) p.blocks.push_back(*b);
  }
  return p;
}

std::size_t Schedule::block_count() const {
  std::size_t total = 0;
  for (const auto& layer : layers) total += layer.block_count();
  return total;
}

PauliBlock sort_strings(const PauliBlock& block) {
  PauliBlock out = block;
  std::stable_sort(out.strings.begin(), out.strings.end(),
                   [](const WeightedString& a, const WeightedString& b) {
                     return lex_compare(a.string, b.string) < 0;
                   });
  return out;
}

namespace {

struct Candidate {
  std::size_t source;
  PauliBlock block;  // strings sorted
  QubitSet active;
};

/// Sorted blocks with identity-only blocks removed and reported.
std::vector<Candidate> prepare(const Program& program, std::vector<std::size_t>& dropped) {
  program.validate();
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < program.blocks.size(); ++i) {
    Candidate c{i, sort_strings(program.blocks[i]), {}};
    c.active = active_qubits(c.block);
    if (c.active.empty()) {
      dropped.push_back(i);
      warn("block " + std::to_string(i) + " has no active qubit and is dropped");
      continue;
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool first_string_less(const Candidate& a, const Candidate& b) {
  return lex_compare(a.block.strings.front().string, b.block.strings.front().string) < 0;
}

bool disjoint(const QubitSet& a, const QubitSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

}  // namespace

Schedule gco_schedule(const Program& program) {
  Schedule s;
  s.n_qubits = program.n_qubits;
  std::vector<Candidate> blocks = prepare(program, s.dropped);
  std::stable_sort(blocks.begin(), blocks.end(), first_string_less);
  for (auto& c : blocks) {
    Layer layer;
    layer.main_block = std::move(c.block);
    layer.main_index = c.source;
    s.layers.push_back(std::move(layer));
  }
  return s;
}

std::size_t estimate_depth(const PauliBlock& block) {
  std::size_t depth = 0;
  for (const auto& ws : block.strings) {
    const std::size_t k = ws.string.weight();
    if (k == 0) continue;
    depth += 2 * (k - 1) + 1;
    const auto axes = ws.string.axes();
    if (std::any_of(axes.begin(), axes.end(),
                    [](PauliAxis a) { return a == PauliAxis::X || a == PauliAxis::Y; })) {
      depth += 2;
    }
  }
  return depth;
}

std::size_t string_overlap(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("string_overlap: length mismatch");
  }
  std::size_t n = 0;
  for (Qubit q = 0; q < a.size(); ++q) {
    if (a[q] != PauliAxis::I && a[q] == b[q]) ++n;
  }
  return n;
}

std::size_t overlap(const PauliString& tail, const PauliBlock& block) {
  if (block.strings.empty()) return 0;
  return string_overlap(tail, block.strings.front().string);
}

Schedule do_schedule(const Program& program) {
  Schedule s;
  s.n_qubits = program.n_qubits;
  std::vector<Candidate> sorted = prepare(program, s.dropped);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Candidate& a, const Candidate& b) {
    if (a.active.size() != b.active.size()) return a.active.size() > b.active.size();
    return first_string_less(a, b);
  });

  std::vector<bool> placed(sorted.size(), false);
  std::size_t remaining = sorted.size();
  const PauliString* previous_tail = nullptr;

  while (remaining > 0) {
    // Main block: best boundary overlap with the previous main block; the
    // earliest sorted position wins ties (and seeds the first layer).
    std::size_t main = sorted.size();
    std::size_t best = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (placed[i]) continue;
      const std::size_t score = previous_tail ? overlap(*previous_tail, sorted[i].block) : 0;
      if (main == sorted.size() || score > best) {
        main = i;
        best = score;
      }
    }
    placed[main] = true;
    --remaining;

    Layer layer;
    layer.main_block = sorted[main].block;
    layer.main_index = sorted[main].source;
    const QubitSet& main_active = sorted[main].active;
    const std::size_t budget = estimate_depth(sorted[main].block);

    // Padding runs on qubits disjoint from the main block. Padding blocks may
    // share qubits with each other, in which case they stack in time.
    std::vector<std::size_t> busy_until(program.n_qubits, 0);
    for (std::size_t i = 0; i < sorted.size() && remaining > 0; ++i) {
      if (placed[i] || !disjoint(sorted[i].active, main_active)) continue;
      std::size_t start = 0;
      for (Qubit q : sorted[i].active) start = std::max(start, busy_until[q]);
      const std::size_t finish = start + estimate_depth(sorted[i].block);
      if (finish > budget) continue;
      for (Qubit q : sorted[i].active) busy_until[q] = finish;
      placed[i] = true;
      --remaining;
      layer.padded_blocks.push_back(sorted[i].block);
      layer.padded_indices.push_back(sorted[i].source);
    }

    s.layers.push_back(std::move(layer));
    previous_tail = &s.layers.back().main_block.strings.back().string;
  }
  return s;
}

}  // namespace paulic
