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

#include "paulic/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>

namespace paulic {

char axis_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::I:
      return 'I';
    case PauliAxis::X:
      return 'X';
    case PauliAxis::Y:
      return 'Y';
    case PauliAxis::Z:
      return 'Z';
  }
  return '?';
}

std::optional<PauliAxis> axis_from_char(char c) {
  switch (c) {
    case 'I':
      return PauliAxis::I;
    case 'X':
      return PauliAxis::X;
    case 'Y':
      return PauliAxis::Y;
    case 'Z':
      return PauliAxis::Z;
    default:
      return std::nullopt;
  }
}

int axis_rank(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return 0;
    case PauliAxis::Y:
      return 1;
    case PauliAxis::Z:
      return 2;
    case PauliAxis::I:
      return 3;
  }
  return 3;
}

PauliString::PauliString(std::size_t n_qubits) : axes_(n_qubits, PauliAxis::I) {}

PauliString::PauliString(std::vector<PauliAxis> axes) : axes_(std::move(axes)) {}

PauliString PauliString::from_text(std::string_view text) {
  std::vector<PauliAxis> axes(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto axis = axis_from_char(text[i]);
    if (!axis) {
      throw std::invalid_argument("invalid Pauli axis '" + std::string(1, text[i]) +
                                  "' in \"" + std::string(text) + "\"");
    }
    axes[text.size() - 1 - i] = *axis;
  }
  return PauliString(std::move(axes));
}

PauliAxis PauliString::at(Qubit q) const {
  if (q >= axes_.size()) throw std::out_of_range("qubit index out of range");
  return axes_[q];
}

void PauliString::set(Qubit q, PauliAxis axis) {
  if (q >= axes_.size()) throw std::out_of_range("qubit index out of range");
  axes_[q] = axis;
}

QubitSet PauliString::support() const {
  QubitSet out;
  for (Qubit q = 0; q < axes_.size(); ++q) {
    if (axes_[q] != PauliAxis::I) out.push_back(q);
  }
  return out;
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(
      std::count_if(axes_.begin(), axes_.end(), [](PauliAxis a) { return a != PauliAxis::I; }));
}

bool PauliString::is_identity() const { return weight() == 0; }

std::string PauliString::to_text() const {
  std::string out;
  out.reserve(axes_.size());
  for (auto it = axes_.rbegin(); it != axes_.rend(); ++it) out.push_back(axis_char(*it));
  return out;
}

std::strong_ordering lex_compare(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("lex_compare: strings of length " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
  }
  for (std::size_t i = a.size(); i-- > 0;) {
    const int ra = axis_rank(a[i]);
    const int rb = axis_rank(b[i]);
    if (ra != rb) return ra <=> rb;
  }
  return std::strong_ordering::equal;
}

UnboundParameterError::UnboundParameterError(const std::string& symbol)
    : std::runtime_error("unbound parameter symbol '" + symbol + "'"), symbol_(symbol) {}

Parameter Parameter::literal(double value) {
  Parameter p;
  p.value_ = value;
  return p;
}

Parameter Parameter::symbol(std::string name) {
  Parameter p;
  p.value_ = std::move(name);
  return p;
}

double Parameter::resolve(const Bindings& bindings) const {
  if (!is_symbol()) return literal_value();
  auto it = bindings.find(symbol_name());
  if (it == bindings.end()) throw UnboundParameterError(symbol_name());
  return it->second;
}

std::string Parameter::to_text() const {
  if (is_symbol()) return symbol_name();
  char buf[64];
  auto res = std::to_chars(std::begin(buf), std::end(buf), literal_value());
  return std::string(buf, res.ptr);
}

void Program::validate() const {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (const auto& ws : blocks[b].strings) {
      if (ws.string.size() != n_qubits) {
        throw std::invalid_argument("block " + std::to_string(b) + ": string " +
                                    ws.string.to_text() + " has length " +
                                    std::to_string(ws.string.size()) + ", expected " +
                                    std::to_string(n_qubits));
      }
      if (!std::isfinite(ws.weight)) {
        throw std::invalid_argument("block " + std::to_string(b) + ": non-finite weight");
      }
    }
  }
}

std::size_t Program::string_count() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.strings.size();
  return total;
}

QubitSet active_qubits(const PauliBlock& block) {
  QubitSet out;
  for (const auto& ws : block.strings) {
    QubitSet merged;
    const QubitSet s = ws.string.support();
    std::set_union(out.begin(), out.end(), s.begin(), s.end(), std::back_inserter(merged));
    out = std::move(merged);
  }
  return out;
}

QubitSet core_qubits(const PauliBlock& block) {
  if (block.strings.empty()) return {};
  QubitSet out = block.strings.front().string.support();
  for (std::size_t i = 1; i < block.strings.size(); ++i) {
    QubitSet kept;
    const QubitSet s = block.strings[i].string.support();
    std::set_intersection(out.begin(), out.end(), s.begin(), s.end(), std::back_inserter(kept));
    out = std::move(kept);
  }
  return out;
}

std::size_t active_length(const PauliBlock& block) { return active_qubits(block).size(); }

}  // namespace paulic
