// Copyright 2026 The kronsim Authors
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

#include "kronsim/circuit.hpp"

namespace kronsim {

/// Parse failure with a 1-based source position.
class QasmError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Unsupported, Semantic };

  QasmError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// OpenQASM 2.0 text for the circuit: header, one `qreg q[W];`, then one
/// statement per gate. Angles are resolved from `params` and printed with 17
/// significant digits. Internal qubit k is `q[k]`, the most significant bit.
std::string export_qasm(const Circuit& circuit, const ParamStore& params);
std::string export_qasm(const Circuit& circuit);

/// Parses the subset written by export_qasm: the nine supported gates on a
/// single quantum register, `//` comments, LF or CRLF line endings. Angle
/// expressions accept numbers, `pi`, unary minus, `*`, `/` and parentheses.
/// Every rotation gets its own trainable parameter named `theta_<n>`.
Circuit parse_qasm(std::string_view text);

}  // namespace kronsim
