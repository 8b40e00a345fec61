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
#include <stdexcept>
#include <string>
#include <string_view>

#include "paulic/pauli.hpp"

namespace paulic {

/// Syntax or validation failure in a Pauli IR source, with a 1-based
/// position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// Parses the line-oriented Pauli IR text format:
///
///     qubits <n>
///     block [param <literal-or-symbol>] {
///       <axes> [* <weight>]
///     }
///
/// `#` starts a comment. When `bindings` is non-null every parameter symbol
/// must be bound in it; otherwise symbols are kept for later resolution.
Program parse_program(std::string_view text, const Bindings* bindings = nullptr);

/// Inverse of parse_program up to whitespace and comments.
std::string emit_program(const Program& program);

}  // namespace paulic
