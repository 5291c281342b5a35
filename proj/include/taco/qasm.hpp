// Copyright 2026 The taco authors
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

#include <stdexcept>
#include <string>

#include "taco/circuit.hpp"

namespace taco {

/// Parse failure with 1-based source position.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                             ": " + message),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// Parses the supported OpenQASM 2.0 subset: one quantum register, one
/// optional classical register, gate calls over the built-in alphabet,
/// and `pi` arithmetic in parameters. Angles that are dyadic multiples of
/// pi are stored exactly; rx(pi/4) and rx(-pi/4) canonicalize to the
/// dedicated pi/4-rotation kinds.
Circuit parse_qasm(const std::string& text);

/// Emits OpenQASM 2.0 such that parse_qasm(emit_qasm(c)) == c structurally
/// for circuits in the parser's image.
std::string emit_qasm(const Circuit& c);

/// Parses a parameter expression ("pi/8", "3*pi/2", "0.25") standalone;
/// used by the CLI and the synthesis sidecar reader.
Angle parse_angle_expr(const std::string& text);

}  // namespace taco
