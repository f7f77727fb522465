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

#include "kronsim/gates.hpp"

#include <cmath>
#include <numbers>

namespace kronsim {
namespace {

constexpr Complex kI{0.0, 1.0};

Matrix pauli(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::X:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::RY:
    case GateKind::Y:
      return {{0.0, -kI}, {kI, 0.0}};
    case GateKind::RZ:
    case GateKind::Z:
      return {{1.0, 0.0}, {0.0, -1.0}};
    default:
      throw InvalidArgument("pauli: no Pauli generator for " + std::string(gate_name(kind)));
  }
}

}  // namespace

Complex evaluate(Coefficient f, double theta) {
  switch (f) {
    case Coefficient::CosHalf:
      return {std::cos(theta / 2), 0.0};
    case Coefficient::MinusISinHalf:
      return {0.0, -std::sin(theta / 2)};
  }
  return {};
}

Matrix PartialDecomposition::evaluate(double theta) const {
  Matrix m = kronsim::evaluate(f_a, theta) * a;
  m += kronsim::evaluate(f_b, theta) * b;
  return m;
}

PartialDecomposition decompose(GateKind kind) {
  if (!is_parametric(kind))
    throw InvalidArgument("decompose: " + std::string(gate_name(kind)) + " is not parametric");
  return PartialDecomposition{kind, Matrix::identity(2), pauli(kind), Coefficient::CosHalf,
                              Coefficient::MinusISinHalf};
}

Matrix fixed_matrix(GateKind kind) {
  const double s = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case GateKind::H:
      return {{s, s}, {s, -s}};
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      return pauli(kind);
    case GateKind::CNOT:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    case GateKind::CZ:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    default:
      throw InvalidArgument("fixed_matrix: " + std::string(gate_name(kind)) + " is parametric");
  }
}

Matrix gate_matrix(GateKind kind, std::optional<double> theta) {
  if (is_parametric(kind) != theta.has_value())
    throw InvalidArgument("gate_matrix: angle must be given exactly for parametric gates");
  if (!theta) return fixed_matrix(kind);
  const double c = std::cos(*theta / 2);
  const double s = std::sin(*theta / 2);
  switch (kind) {
    case GateKind::RX:
      return {{c, -kI * s}, {-kI * s, c}};
    case GateKind::RY:
      return {{c, -s}, {s, c}};
    case GateKind::RZ:
      return {{std::polar(1.0, -*theta / 2), 0.0}, {0.0, std::polar(1.0, *theta / 2)}};
    default:
      break;
  }
  throw InvalidArgument("gate_matrix: unsupported gate");
}

}  // namespace kronsim
