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

// Test-only oracles. Nothing here goes through kron(), expand*, the kernels or
// the executor: full-width matrices are built entry by entry from basis-state
// bits, so they can check those code paths independently.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "kronsim/circuit.hpp"
#include "kronsim/gates.hpp"
#include "kronsim/matrix.hpp"
#include "kronsim/state.hpp"

namespace kronsim::testing {

inline int bit(std::size_t index, int qubit, int width) {
  return static_cast<int>((index >> (width - 1 - qubit)) & 1U);
}

/// Full-width matrix of a 1- or 2-qubit gate: entry (i, j) is the small
/// matrix entry for the gate bits of i and j when every other bit agrees.
inline Matrix dense_gate(const Matrix& small, const std::vector<int>& qubits, int width) {
  const std::size_t dim = std::size_t{1} << width;
  Matrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      bool others_equal = true;
      for (int q = 0; q < width && others_equal; ++q) {
        bool in_gate = false;
        for (int g : qubits) in_gate |= g == q;
        if (!in_gate && bit(i, q, width) != bit(j, q, width)) others_equal = false;
      }
      if (!others_equal) continue;
      std::size_t si = 0, sj = 0;
      for (int g : qubits) {
        si = si << 1 | static_cast<std::size_t>(bit(i, g, width));
        sj = sj << 1 | static_cast<std::size_t>(bit(j, g, width));
      }
      out(i, j) = small(si, sj);
    }
  }
  return out;
}

inline Matrix dense_gate(const GateInstance& gate, double theta, int width) {
  const auto small = is_parametric(gate.kind) ? gate_matrix(gate.kind, theta) : gate_matrix(gate.kind);
  return dense_gate(small, gate.qubits, width);
}

/// Matrix-vector product written out longhand.
inline std::vector<Complex> dense_apply(const Matrix& m, std::span<const Complex> x) {
  std::vector<Complex> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) y[i] += m(i, k) * x[k];
  return y;
}

/// Runs every row of `state` through the circuit gate by gate with dense matrices.
inline StateVector dense_run(const Circuit& c, const std::vector<double>& angles, const StateVector& state) {
  StateVector out = state;
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const Matrix m = dense_gate(c.gates[g], angles[g], c.num_qubits);
    for (std::size_t b = 0; b < out.batch(); ++b) {
      const auto y = dense_apply(m, out.row(b));
      std::copy(y.begin(), y.end(), out.row(b).begin());
    }
  }
  return out;
}

inline Matrix dense_unitary(const Circuit& c, const std::vector<double>& angles) {
  Matrix u = Matrix::identity(std::size_t{1} << c.num_qubits);
  for (std::size_t g = 0; g < c.gates.size(); ++g) u = dense_gate(c.gates[g], angles[g], c.num_qubits) * u;
  return u;
}

inline StateVector random_state(int width, std::size_t batch, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  StateVector s(width, batch);
  for (std::size_t b = 0; b < batch; ++b) {
    double norm = 0.0;
    for (auto& a : s.row(b)) {
      a = {n(rng), n(rng)};
      norm += std::norm(a);
    }
    for (auto& a : s.row(b)) a /= std::sqrt(norm);
  }
  return s;
}

/// Random circuit over all nine gate kinds; every rotation gets its own parameter.
inline Circuit random_circuit(int width, int gates, std::mt19937_64& rng, bool two_qubit = true) {
  static constexpr GateKind kKinds[] = {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::H, GateKind::X,
                                        GateKind::Y,  GateKind::Z,  GateKind::CNOT, GateKind::CZ};
  std::uniform_int_distribution<int> kind_pick(0, two_qubit && width > 1 ? 8 : 6);
  std::uniform_int_distribution<int> qubit(0, width - 1);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Circuit c(width);
  for (int g = 0; g < gates; ++g) {
    const GateKind k = kKinds[kind_pick(rng)];
    if (arity(k) == 2) {
      const int a = qubit(rng);
      int b = qubit(rng);
      while (b == a) b = qubit(rng);
      c.add(k, {a, b});
    } else if (is_parametric(k)) {
      c.add_rotation(k, qubit(rng), "p" + std::to_string(c.params.size()), angle(rng));
    } else {
      c.add(k, {qubit(rng)});
    }
  }
  return c;
}

}  // namespace kronsim::testing
