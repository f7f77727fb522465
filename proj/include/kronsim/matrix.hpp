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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronsim {

using Complex = std::complex<double>;

/// Thrown for malformed arguments (bad widths, out-of-range qubits, arity
/// mismatches). Distinct from data/IO failures so the CLI can map it to the
/// usage exit code.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major complex matrix. Square in every use here, but the shape is
/// kept general so state buffers can be viewed as (rows, cols) blocks.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }
  std::span<const Complex> values() const { return data_; }

  Matrix& operator*=(Complex s);
  Matrix& operator+=(const Matrix& other);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, Matrix m);
Matrix operator+(Matrix a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& m);

double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

/// ‖U†U − I‖_max.
double unitarity_error(const Matrix& u);
bool is_unitary(const Matrix& u, double tol = 1e-12);

std::size_t count_nonzeros(const Matrix& m, double tol = 0.0);

std::string to_string(const Matrix& m);

}  // namespace kronsim
