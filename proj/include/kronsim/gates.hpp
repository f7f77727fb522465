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

#include <optional>

#include "kronsim/circuit.hpp"
#include "kronsim/matrix.hpp"

namespace kronsim {

/// Scalar coefficient of a partial matrix as a function of the gate angle.
enum class Coefficient {
  CosHalf,       // cos(θ/2)
  MinusISinHalf  // −i·sin(θ/2)
};

Complex evaluate(Coefficient f, double theta);

/// Parametric gate written as A·f_a(θ) + B·f_b(θ) with constant A and B.
struct PartialDecomposition {
  GateKind kind = GateKind::RX;
  Matrix a;
  Matrix b;
  Coefficient f_a = Coefficient::CosHalf;
  Coefficient f_b = Coefficient::MinusISinHalf;

  /// A·f_a(θ) + B·f_b(θ).
  Matrix evaluate(double theta) const;
};

/// Partials for RX, RY and RZ. All three share f_a = cos(θ/2), f_b = −i·sin(θ/2),
/// with A = I and B the corresponding Pauli matrix.
PartialDecomposition decompose(GateKind kind);

/// Standard unitary of a non-parametric gate. Two-qubit matrices are in MSb-0
/// order with the first listed qubit (the control) as the high bit.
Matrix fixed_matrix(GateKind kind);

/// Full small matrix built directly from trigonometric entries; never routed
/// through PartialDecomposition, so it can serve as the reference for it.
Matrix gate_matrix(GateKind kind, std::optional<double> theta = std::nullopt);

}  // namespace kronsim
