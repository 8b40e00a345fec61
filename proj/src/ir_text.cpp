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

#include "paulic/ir_text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

namespace paulic {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    // Braces and '*' are tokens on their own even when glued to a word.
    if (line[i] == '{' || line[i] == '}' || line[i] == '*') {
      out.push_back({line.substr(i, 1), i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '{' && line[j] != '}' && line[j] != '*') {
      ++j;
    }
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::optional<double> parse_real(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::string format_real(double value) {
  char buf[64];
  auto res = std::to_chars(std::begin(buf), std::end(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace

Program parse_program(std::string_view text, const Bindings* bindings) {
  Program program;
  bool have_header = false;
  bool in_block = false;
  std::size_t block_line = 0;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!have_header) {
      if (tokens[0].text != "qubits" || tokens.size() != 2) {
        throw ParseError(line_no, tokens[0].column, "expected header 'qubits <n>'");
      }
      std::size_t n = 0;
      const auto& tok = tokens[1];
      auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), n);
      if (ec != std::errc() || ptr != tok.text.data() + tok.text.size() || n == 0) {
        throw ParseError(line_no, tok.column, "qubit count must be a positive integer");
      }
      program.n_qubits = n;
      have_header = true;
    } else if (!in_block) {
      if (tokens[0].text != "block") {
        throw ParseError(line_no, tokens[0].column, "expected 'block'");
      }
      PauliBlock block;
      std::size_t i = 1;
      if (i < tokens.size() && tokens[i].text == "param") {
        if (i + 1 >= tokens.size() || tokens[i + 1].text == "{") {
          throw ParseError(line_no, tokens[i].column, "missing parameter after 'param'");
        }
        const Token& value = tokens[i + 1];
        if (auto literal = parse_real(value.text)) {
          block.parameter = Parameter::literal(*literal);
        } else if (is_identifier(value.text)) {
          std::string name(value.text);
          if (bindings != nullptr && !bindings->contains(name)) {
            throw ParseError(line_no, value.column, "unbound parameter symbol '" + name + "'");
          }
          block.parameter = Parameter::symbol(std::move(name));
        } else {
          throw ParseError(line_no, value.column,
                           "parameter must be a real literal or a symbol name");
        }
        i += 2;
      }
      if (i >= tokens.size() || tokens[i].text != "{") {
        const std::size_t col = i < tokens.size() ? tokens[i].column : line.size() + 1;
        throw ParseError(line_no, col, "expected '{'");
      }
      if (i + 1 != tokens.size()) {
        throw ParseError(line_no, tokens[i + 1].column, "unexpected text after '{'");
      }
      program.blocks.push_back(std::move(block));
      in_block = true;
      block_line = line_no;
    } else {
      if (tokens[0].text == "}") {
        if (tokens.size() != 1) {
          throw ParseError(line_no, tokens[1].column, "unexpected text after '}'");
        }
        in_block = false;
        continue;
      }
      const Token& axes = tokens[0];
      if (axes.text.size() != program.n_qubits) {
        throw ParseError(line_no, axes.column,
                         "string length " + std::to_string(axes.text.size()) +
                             " does not match qubit count " + std::to_string(program.n_qubits));
      }
      for (std::size_t k = 0; k < axes.text.size(); ++k) {
        if (!axis_from_char(axes.text[k])) {
          throw ParseError(line_no, axes.column + k,
                           "unknown axis '" + std::string(1, axes.text[k]) + "'");
        }
      }
      WeightedString ws{PauliString::from_text(axes.text), 1.0};
      if (tokens.size() > 1) {
        if (tokens[1].text != "*" || tokens.size() != 3) {
          throw ParseError(line_no, tokens[1].column, "expected '* <weight>'");
        }
        auto weight = parse_real(tokens[2].text);
        if (!weight) throw ParseError(line_no, tokens[2].column, "invalid weight");
        ws.weight = *weight;
      }
      program.blocks.back().strings.push_back(std::move(ws));
    }
    if (end == text.size()) break;
  }

  if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'qubits <n>' header");
  if (in_block) throw ParseError(block_line, 1, "block is not closed");
  return program;
}

std::string emit_program(const Program& program) {
  std::ostringstream out;
  out << "qubits " << program.n_qubits << '\n';
  for (const auto& block : program.blocks) {
    out << "block param " << block.parameter.to_text() << " {\n";
    for (const auto& ws : block.strings) {
      out << "  " << ws.string.to_text() << " * " << format_real(ws.weight) << '\n';
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace paulic
