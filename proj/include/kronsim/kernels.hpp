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
#include <cstdint>
#include <span>
#include <vector>

#include "kronsim/matrix.hpp"

// Dense batched kernels. Every kernel treats its input as a row-major block of
// `rows` vectors of length n and applies an n×n matrix to each vector, so a
// batched state (B, 2^W) and a reshaped state (B·2^{W−g}, 2^g) go through the
// same code. The parallel versions split work with OpenMP; the versions in
// `reference` are plain serial loops kept as the test oracle and benchmark
// baseline.

namespace kronsim::kernels {

/// out_r = m · in_r for every row r. `in` and `out` must not alias.
void apply_matrix(const Matrix& m, std::span<const Complex> in, std::span<Complex> out);

/// out_r = (fa·a + fb·b) · in_r, forming each combined matrix row on the fly.
void apply_combined(const Matrix& a, Complex fa, const Matrix& b, Complex fb,
                    std::span<const Complex> in, std::span<Complex> out);

/// Like apply_combined, but row r uses its own coefficients fa[r], fb[r].
void apply_combined_per_row(const Matrix& a, std::span<const Complex> fa, const Matrix& b,
                            std::span<const Complex> fb, std::span<const Complex> in,
                            std::span<Complex> out);

/// out_r = m_r · in_r with one matrix per row (all the same shape).
void apply_matrix_per_row(std::span<const Matrix> m, std::span<const Complex> in,
                          std::span<Complex> out);

/// Index tables that move an ordered subset of qubits to the trailing axis.
/// global index = lead[r] | local[l] for lead index r and trailing index l.
struct AxisPermutation {
  int width = 0;
  int group_width = 0;
  std::vector<std::uint64_t> lead;
  std::vector<std::uint64_t> local;

  /// `qubits` are the group's qubits in local order (local qubit 0 is the
  /// most significant bit of the trailing index). MSb-0 global indexing.
  static AxisPermutation make(int width, std::span<const int> qubits);
};

/// dst[(b·2^{W−g} + r)·2^g + l] = src[b·2^W + lead[r] | local[l]]
void gather(const AxisPermutation& p, std::size_t batch, std::span<const Complex> src,
            std::span<Complex> dst);
/// Inverse of gather.
void scatter(const AxisPermutation& p, std::size_t batch, std::span<const Complex> src,
             std::span<Complex> dst);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int max_threads();
/// Caps the parallel kernels' thread count; 0 restores the runtime default.
void set_num_threads(int n);

namespace reference {

void apply_matrix(const Matrix& m, std::span<const Complex> in, std::span<Complex> out);
void apply_combined(const Matrix& a, Complex fa, const Matrix& b, Complex fb,
                    std::span<const Complex> in, std::span<Complex> out);
void gather(const AxisPermutation& p, std::size_t batch, std::span<const Complex> src,
            std::span<Complex> dst);
void scatter(const AxisPermutation& p, std::size_t batch, std::span<const Complex> src,
             std::span<Complex> dst);

}  // namespace reference

}  // namespace kronsim::kernels
