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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace paulic {

using Qubit = std::size_t;

/// Sorted, duplicate-free list of qubit indices.
using QubitSet = std::vector<Qubit>;

enum class PauliAxis : std::uint8_t { I, X, Y, Z };

char axis_char(PauliAxis axis);
std::optional<PauliAxis> axis_from_char(char c);

/// Position of `axis` in the scheduling order X < Y < Z < I.
int axis_rank(PauliAxis axis);

/// Word over {I, X, Y, Z}; index q holds the operator acting on qubit q.
///
/// The textual form is written high qubit first, so "ZXI" places I on
/// qubit 0, X on qubit 1 and Z on qubit 2.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits);
  explicit PauliString(std::vector<PauliAxis> axes);

  /// Parses the high-qubit-first text form. Throws std::invalid_argument on
  /// characters outside {I, X, Y, Z}.
  static PauliString from_text(std::string_view text);

  std::size_t size() const { return axes_.size(); }
  PauliAxis operator[](Qubit q) const { return axes_[q]; }
  PauliAxis at(Qubit q) const;
  void set(Qubit q, PauliAxis axis);
  std::span<const PauliAxis> axes() const { return axes_; }

  QubitSet support() const;
  std::size_t weight() const;
  bool is_identity() const;
  std::string to_text() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<PauliAxis> axes_;
};

/// Little-endian lexicographic order: qubits are compared from n-1 down to 0
/// under X < Y < Z < I. Throws std::invalid_argument on a length mismatch.
std::strong_ordering lex_compare(const PauliString& a, const PauliString& b);

struct WeightedString {
  PauliString string;
  double weight = 1.0;

  bool operator==(const WeightedString&) const = default;
};

using Bindings = std::map<std::string, double, std::less<>>;

class UnboundParameterError : public std::runtime_error {
 public:
  explicit UnboundParameterError(const std::string& symbol);
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// Rotation parameter of a block: a literal or a named symbol bound later.
class Parameter {
 public:
  Parameter() = default;
  static Parameter literal(double value);
  static Parameter symbol(std::string name);

  bool is_symbol() const { return std::holds_alternative<std::string>(value_); }
  double literal_value() const { return std::get<double>(value_); }
  const std::string& symbol_name() const { return std::get<std::string>(value_); }

  /// Literal value, or the bound value of the symbol.
  double resolve(const Bindings& bindings) const;
  std::string to_text() const;

  bool operator==(const Parameter&) const = default;

 private:
  std::variant<double, std::string> value_ = 1.0;
};

/// Weighted strings sharing one rotation parameter. The compiler never
/// separates the strings of a block.
struct PauliBlock {
  std::vector<WeightedString> strings;
  Parameter parameter;

  bool operator==(const PauliBlock&) const = default;
};

struct Program {
  std::size_t n_qubits = 0;
  std::vector<PauliBlock> blocks;

  /// Throws std::invalid_argument if a string length differs from n_qubits
  /// or a weight is not finite.
  void validate() const;

  std::size_t string_count() const;

  bool operator==(const Program&) const = default;
};

/// Union of the supports of all strings in the block.
QubitSet active_qubits(const PauliBlock& block);

/// Intersection of the supports of all strings in the block.
QubitSet core_qubits(const PauliBlock& block);

std::size_t active_length(const PauliBlock& block);

}  // namespace paulic
