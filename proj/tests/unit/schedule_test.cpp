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

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "paulic/bench.hpp"
#include "paulic/hamiltonian.hpp"
#include "paulic/schedule.hpp"

namespace paulic {
namespace {

PauliBlock block_of(std::initializer_list<const char*> strings) {
  PauliBlock b;
  for (const char* s : strings) b.strings.push_back({PauliString::from_text(s), 1.0});
  return b;
}

Program program_of(std::size_t n, std::vector<PauliBlock> blocks) {
  Program p;
  p.n_qubits = n;
  p.blocks = std::move(blocks);
  return p;
}

Program random_program(std::mt19937_64& rng, std::size_t n, int n_blocks) {
  std::uniform_int_distribution<int> axis(0, 3), count(1, 3);
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  Program p;
  p.n_qubits = n;
  for (int b = 0; b < n_blocks; ++b) {
    PauliBlock blk;
    blk.parameter = Parameter::literal(w(rng));
    const int k = count(rng);
    for (int s = 0; s < k; ++s) {
      PauliString str(n);
      for (Qubit q = 0; q < n; ++q) str.set(q, static_cast<PauliAxis>(axis(rng)));
      blk.strings.push_back({str, w(rng)});
    }
    p.blocks.push_back(blk);
  }
  return p;
}

std::multiset<std::string> string_multiset(const Program& p) {
  std::multiset<std::string> out;
  for (const auto& b : p.blocks) {
    for (const auto& ws : b.strings) {
      if (!ws.string.is_identity()) out.insert(ws.string.to_text() + "/" + std::to_string(ws.weight));
    }
  }
  return out;
}

std::vector<std::string> first_strings(const Schedule& s) {
  std::vector<std::string> out;
  for (const auto& l : s.layers) {
    for (const PauliBlock* b : l.blocks()) out.push_back(b->strings.front().string.to_text());
  }
  return out;
}

TEST(SortStrings, StableLexOrder) {
  const PauliBlock b = sort_strings(block_of({"ZI", "XI", "IY", "XI"}));
  std::vector<std::string> got;
  for (const auto& ws : b.strings) got.push_back(ws.string.to_text());
  EXPECT_EQ(got, (std::vector<std::string>{"XI", "XI", "ZI", "IY"}));
}

TEST(GcoSchedule, OrdersByFirstString) {
  const Schedule s =
      gco_schedule(program_of(3, {block_of({"ZII"}), block_of({"XII"}), block_of({"YII"})}));
  EXPECT_EQ(first_strings(s), (std::vector<std::string>{"XII", "YII", "ZII"}));
  for (const auto& l : s.layers) EXPECT_TRUE(l.padded_blocks.empty());
}

TEST(GcoSchedule, SingleBlock) {
  const Schedule s = gco_schedule(program_of(2, {block_of({"ZX", "XZ"})}));
  ASSERT_EQ(s.layers.size(), 1u);
  EXPECT_EQ(s.layers[0].main_index, 0u);
}

TEST(GcoSchedule, EqualKeysKeepInputOrder) {
  PauliBlock a = block_of({"XZ"});
  PauliBlock b = block_of({"XZ"});
  a.parameter = Parameter::literal(0.1);
  b.parameter = Parameter::literal(0.2);
  const Schedule s = gco_schedule(program_of(2, {block_of({"ZZ"}), a, b}));
  ASSERT_EQ(s.layers.size(), 3u);
  EXPECT_EQ(s.layers[0].main_index, 1u);
  EXPECT_EQ(s.layers[1].main_index, 2u);
  EXPECT_EQ(s.layers[2].main_index, 0u);
}

TEST(GcoSchedule, IdentityBlocksAreDropped) {
  const Schedule s = gco_schedule(program_of(2, {block_of({"II"}), block_of({"XI"})}));
  EXPECT_EQ(s.layers.size(), 1u);
  EXPECT_EQ(s.dropped, (std::vector<std::size_t>{0}));
}

TEST(EstimateDepth, ClosedForm) {
  EXPECT_EQ(estimate_depth(block_of({"ZZ"})), 3u);
  EXPECT_EQ(estimate_depth(block_of({"XX"})), 5u);
  EXPECT_EQ(estimate_depth(PauliBlock{}), 0u);
  EXPECT_EQ(estimate_depth(block_of({"ZZZ", "IIY"})), 5u + 3u);
}

TEST(Overlap, BoundaryStrings) {
  EXPECT_EQ(overlap(PauliString::from_text("ZZI"), block_of({"ZZY"})), 2u);
  EXPECT_EQ(overlap(PauliString::from_text("ZZI"), block_of({"IXI"})), 0u);
  EXPECT_EQ(overlap(PauliString::from_text("XYZI"), block_of({"XYZI", "ZZZZ"})), 3u);
  EXPECT_THROW(string_overlap(PauliString::from_text("ZZ"), PauliString::from_text("ZZZ")),
               std::invalid_argument);
}

// ZZZZ is longest; ZZII overlaps its tail on two qubits; IIXX is too deep
// to pad next to ZZII but fits beside XXII.
TEST(DoSchedule, HandTracedExample) {
  const Program p = program_of(4, {block_of({"ZZZZ"}), block_of({"XXII"}), block_of({"IIXX"}),
                                   block_of({"ZZII"})});
  const Schedule s = do_schedule(p);
  ASSERT_EQ(s.layers.size(), 3u);
  EXPECT_EQ(s.layers[0].main_index, 0u);
  EXPECT_TRUE(s.layers[0].padded_indices.empty());
  EXPECT_EQ(s.layers[1].main_index, 3u);
  EXPECT_TRUE(s.layers[1].padded_indices.empty());
  EXPECT_EQ(s.layers[2].main_index, 1u);
  EXPECT_EQ(s.layers[2].padded_indices, (std::vector<std::size_t>{2}));
}

// Sorted by active length, the first long block opens; blocks touching
// nothing of the main block pad the layer while the budget lasts.
TEST(DoSchedule, PaddingStacksWithinBudget) {
  const Program p = program_of(
      6, {block_of({"ZZZZII", "XXXXII"}), block_of({"IIIIZZ"}), block_of({"IIIIZZ"}),
          block_of({"IIIIZZ"}), block_of({"IIIIZZ"}), block_of({"IIIIZZ"})});
  const Schedule s = do_schedule(p);
  // main depth 7 + 9 = 16; five ZZ blocks of depth 3 stack to 15
  ASSERT_EQ(s.layers.size(), 1u);
  EXPECT_EQ(s.layers[0].padded_blocks.size(), 5u);
}

TEST(DoSchedule, SharedQubitPreventsPadding) {
  const Program p = program_of(
      4, {block_of({"ZIIZ"}), block_of({"IZIZ"}), block_of({"IIZZ"}), block_of({"XIIX"})});
  const Schedule s = do_schedule(p);
  EXPECT_EQ(s.layers.size(), 4u);
  for (const auto& l : s.layers) EXPECT_TRUE(l.padded_blocks.empty());
}

TEST(DoSchedule, IsingChainPacksIntoTwoLayers) {
  const Schedule s = do_schedule(gen_lattice({{30}, LatticeModel::Ising}));
  EXPECT_EQ(s.block_count(), 29u);
  EXPECT_EQ(s.layers.size(), 2u);
}

class ScheduleInvariants : public ::testing::TestWithParam<int> {};

TEST_P(ScheduleInvariants, HoldOnRandomPrograms) {
  std::mt19937_64 rng(1000 + GetParam());
  const std::size_t n = 2 + GetParam() % 4;
  const Program p = random_program(rng, n, 3 + GetParam() % 6);
  const auto h = hamiltonian_matrix(p);
  for (const Schedule& s : {gco_schedule(p), do_schedule(p)}) {
    const Program flat = s.flatten();
    EXPECT_EQ(string_multiset(flat), string_multiset(p));
    EXPECT_EQ(s.block_count() + s.dropped.size(), p.blocks.size());
    EXPECT_LT((hamiltonian_matrix(flat) - h).norm(), 1e-10);
    EXPECT_EQ(s.flatten(), flat);
    for (const auto& l : s.layers) {
      const QubitSet main = active_qubits(l.main_block);
      std::vector<std::size_t> busy(n, 0);
      for (const auto& pad : l.padded_blocks) {
        std::size_t start = 0;
        for (Qubit q : active_qubits(pad)) {
          EXPECT_FALSE(std::binary_search(main.begin(), main.end(), q));
          start = std::max(start, busy[q]);
        }
        for (Qubit q : active_qubits(pad)) busy[q] = start + estimate_depth(pad);
      }
      for (std::size_t t : busy) EXPECT_LE(t, estimate_depth(l.main_block));
    }
  }
  const Schedule g = gco_schedule(p);
  for (std::size_t i = 1; i < g.layers.size(); ++i) {
    EXPECT_NE(lex_compare(g.layers[i - 1].main_block.strings.front().string,
                          g.layers[i].main_block.strings.front().string),
              std::strong_ordering::greater);
  }
}

INSTANTIATE_TEST_SUITE_P(Random, ScheduleInvariants, ::testing::Range(0, 40));

}  // namespace
}  // namespace paulic
