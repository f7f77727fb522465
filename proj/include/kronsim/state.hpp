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
#include <span>
#include <vector>

#include "kronsim/matrix.hpp"

namespace kronsim {

/// Batched amplitudes, logical shape (batch, 2^width), row-major. Basis index
/// bit (width−1−q) holds qubit q.
class StateVector {
 public:
  StateVector() = default;
  /// All-zero amplitudes; use zero_state() for |0…0⟩.
  StateVector(int width, std::size_t batch);

  int width() const { return width_; }
  std::size_t batch() const { return batch_; }
  std::size_t dim() const { return std::size_t{1} << width_; }

  std::span<Complex> row(std::size_t b) { return {amps_.data() + b * dim(), dim()}; }
  std::span<const Complex> row(std::size_t b) const { return {amps_.data() + b * dim(), dim()}; }

  std::span<Complex> amplitudes() { return amps_; }
  std::span<const Complex> amplitudes() const { return amps_; }

  Complex& at(std::size_t b, std::size_t index) { return amps_[b * dim() + index]; }
  const Complex& at(std::size_t b, std::size_t index) const { return amps_[b * dim() + index]; }

  /// L2 norm of each batch row.
  std::vector<double> norms() const;

  /// Copies rows [first, first + count) into a new state.
  StateVector slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int width_ = 0;
  std::size_t batch_ = 0;
  std::vector<Complex> amps_;
};

/// |0…0⟩ in every row. Throws InvalidArgument unless width ≥ 1 and batch ≥ 1.
StateVector zero_state(int width, std::size_t batch = 1);

/// Builds a state from explicit rows (each of length 2^width).
StateVector state_from_rows(int width, const std::vector<std::vector<Complex>>& rows);

double max_abs_diff(const StateVector& a, const StateVector& b);

}  // namespace kronsim
