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

#include <random>
#include <sstream>
#include <string>

#include "paulic/ir_text.hpp"

namespace paulic {
namespace {

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

TEST(ParseProgram, MinimalProgram) {
  const Program p = parse_program("qubits 2\nblock param 0.5 {\n  ZZ * 1.0\n}\n");
  EXPECT_EQ(p.n_qubits, 2u);
  ASSERT_EQ(p.blocks.size(), 1u);
  ASSERT_EQ(p.blocks[0].strings.size(), 1u);
  EXPECT_EQ(p.blocks[0].strings[0].string.to_text(), "ZZ");
  EXPECT_DOUBLE_EQ(p.blocks[0].strings[0].weight, 1.0);
  EXPECT_DOUBLE_EQ(p.blocks[0].parameter.literal_value(), 0.5);
}

TEST(ParseProgram, QaoaBlockSharesOneSymbol) {
  // 4 nodes, 5 edges: 0-1 1-2 2-3 3-0 0-2
  const char* src = R"(# maxcut
qubits 4
block param gamma {
  IIZZ
  IZZI
  ZZII
  ZIIZ
  IZIZ
}
)";
  const Program p = parse_program(src);
  ASSERT_EQ(p.blocks.size(), 1u);
  EXPECT_EQ(p.blocks[0].strings.size(), 5u);
  EXPECT_TRUE(p.blocks[0].parameter.is_symbol());
  EXPECT_EQ(p.blocks[0].parameter.symbol_name(), "gamma");
  for (const auto& ws : p.blocks[0].strings) EXPECT_EQ(ws.string.weight(), 2u);
}

TEST(ParseProgram, LengthMismatchIsAnError) {
  try {
    parse_program("qubits 4\nblock {\n  XYZ\n  XYZI\n}\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParseProgram, ReportsPositions) {
  try {
    parse_program("qubits 2\nblock {\n  XQ\n}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(parse_program("block {\n}\n"), ParseError);
  EXPECT_THROW(parse_program("qubits 2\nblock {\n  XX\n"), ParseError);
  EXPECT_THROW(parse_program("qubits 0\n"), ParseError);
  EXPECT_THROW(parse_program("qubits 2\nblock {\n  XX * nope\n}\n"), ParseError);
  EXPECT_THROW(parse_program(""), ParseError);
}

TEST(ParseProgram, BindingsCheckedWhenGiven) {
  const char* src = "qubits 1\nblock param theta {\n  Z\n}\n";
  Bindings b{{"other", 1.0}};
  EXPECT_THROW(parse_program(src, &b), ParseError);
  b["theta"] = 0.3;
  EXPECT_NO_THROW(parse_program(src, &b));
  EXPECT_NO_THROW(parse_program(src));
}

TEST(EmitProgram, EmptyProgramIsHeaderOnly) {
  Program p;
  p.n_qubits = 3;
  EXPECT_EQ(emit_program(p), "qubits 3\n");
}

TEST(EmitProgram, OneStringIsFourLines) {
  const Program p = parse_program("qubits 2\nblock param 0.5 {\n  ZZ * 1.0\n}\n");
  EXPECT_EQ(line_count(emit_program(p)), 4u);
}

TEST(EmitProgram, RoundTripRandom) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> axis(0, 3), count(1, 3);
  std::uniform_real_distribution<double> w(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    Program p;
    p.n_qubits = 3;
    for (int b = 0; b < 5; ++b) {
      PauliBlock blk;
      blk.parameter = b % 2 ? Parameter::symbol("t" + std::to_string(b)) : Parameter::literal(w(rng));
      const int k = count(rng);
      for (int s = 0; s < k; ++s) {
        PauliString str(3);
        for (Qubit q = 0; q < 3; ++q) str.set(q, static_cast<PauliAxis>(axis(rng)));
        blk.strings.push_back({str, w(rng)});
      }
      p.blocks.push_back(blk);
    }
    EXPECT_EQ(parse_program(emit_program(p)), p);
  }
}

}  // namespace
}  // namespace paulic
