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

#include "kronsim/kernels.hpp"

#include <algorithm>

#ifdef KRONSIM_HAVE_OPENMP
#include <omp.h>
#endif

namespace kronsim::kernels {
namespace {

// Below this many complex multiply-adds a parallel region costs more than it saves.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 15;

int g_thread_cap = 0;

int threads_for(std::size_t work) {
  if (work < kParallelThreshold) return 1;
  return max_threads();
}

void check_block(const Matrix& m, std::span<const Complex> in, std::span<Complex> out) {
  if (m.rows() != m.cols() || m.cols() == 0) throw InvalidArgument("kernel: matrix must be square");
  if (in.size() % m.cols() != 0 || in.size() != out.size())
    throw InvalidArgument("kernel: state block does not match matrix width");
}

// Plain real arithmetic: avoids the NaN-recovery path of std::complex operator*.
inline Complex dot(const Complex* a, const Complex* x, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* xd = reinterpret_cast<const double*>(x);
  double re = 0.0, im = 0.0;
#pragma omp simd reduction(+ : re, im)
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = ad[2 * k], ai = ad[2 * k + 1];
    const double xr = xd[2 * k], xi = xd[2 * k + 1];
    re += ar * xr - ai * xi;
    im += ar * xi + ai * xr;
  }
  return {re, im};
}

inline void combine_row(const Complex* a, Complex fa, const Complex* b, Complex fb,
                        Complex* dst, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* dd = reinterpret_cast<double*>(dst);
  const double far = fa.real(), fai = fa.imag(), fbr = fb.real(), fbi = fb.imag();
#pragma omp simd
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = ad[2 * k], ai = ad[2 * k + 1];
    const double br = bd[2 * k], bi = bd[2 * k + 1];
    dd[2 * k] = far * ar - fai * ai + fbr * br - fbi * bi;
    dd[2 * k + 1] = far * ai + fai * ar + fbr * bi + fbi * br;
  }
}

}  // namespace

int max_threads() {
#ifdef KRONSIM_HAVE_OPENMP
  return g_thread_cap > 0 ? g_thread_cap : omp_get_max_threads();
#else
  return 1;
#endif
}

void set_num_threads(int n) { g_thread_cap = std::max(0, n); }

void apply_matrix(const Matrix& m, std::span<const Complex> in, std::span<Complex> out) {
  check_block(m, in, out);
  const std::size_t n = m.cols();
  const std::size_t rows = in.size() / n;
  const auto total = static_cast<std::ptrdiff_t>(rows * n);
  [[maybe_unused]] const int nt = threads_for(rows * n * n);
  // Matrix row outer, state row inner: one matrix row stays hot across the batch.
#pragma omp parallel for num_threads(nt) schedule(static) if (nt > 1)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const std::size_t i = static_cast<std::size_t>(t) / rows;
    const std::size_t r = static_cast<std::size_t>(t) % rows;
    out[r * n + i] = dot(m.row(i).data(), in.data() + r * n, n);
  }
}

void apply_combined(const Matrix& a, Complex fa, const Matrix& b, Complex fb,
                    std::span<const Complex> in, std::span<Complex> out) {
  check_block(a, in, out);
  if (b.rows() != a.rows() || b.cols() != a.cols())
    throw InvalidArgument("apply_combined: partial matrices differ in shape");
  const std::size_t n = a.cols();
  const std::size_t rows = in.size() / n;
  [[maybe_unused]] const int nt = threads_for(rows * n * n);
#pragma omp parallel num_threads(nt) if (nt > 1)
  {
    std::vector<Complex> buf(n);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      combine_row(a.row(i).data(), fa, b.row(i).data(), fb, buf.data(), n);
      for (std::size_t r = 0; r < rows; ++r) out[r * n + i] = dot(buf.data(), in.data() + r * n, n);
    }
  }
}

void apply_combined_per_row(const Matrix& a, std::span<const Complex> fa, const Matrix& b,
                            std::span<const Complex> fb, std::span<const Complex> in,
                            std::span<Complex> out) {
  check_block(a, in, out);
  const std::size_t n = a.cols();
  const std::size_t rows = in.size() / n;
  if (fa.size() != rows || fb.size() != rows)
    throw InvalidArgument("apply_combined_per_row: one coefficient pair per row required");
  const auto total = static_cast<std::ptrdiff_t>(rows * n);
  [[maybe_unused]] const int nt = threads_for(2 * rows * n * n);
#pragma omp parallel for num_threads(nt) schedule(static) if (nt > 1)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const std::size_t i = static_cast<std::size_t>(t) / rows;
    const std::size_t r = static_cast<std::size_t>(t) % rows;
    const Complex* x = in.data() + r * n;
    const Complex sa = dot(a.row(i).data(), x, n);
    const Complex sb = dot(b.row(i).data(), x, n);
    out[r * n + i] = fa[r] * sa + fb[r] * sb;
  }
}

void apply_matrix_per_row(std::span<const Matrix> m, std::span<const Complex> in,
                          std::span<Complex> out) {
  if (m.empty()) throw InvalidArgument("apply_matrix_per_row: no matrices");
  const std::size_t n = m.front().cols();
  const std::size_t rows = in.size() / n;
  if (m.size() != rows) throw InvalidArgument("apply_matrix_per_row: one matrix per row required");
  for (std::size_t r = 0; r < rows; ++r) {
    check_block(m[r], in.subspan(r * n, n), out.subspan(r * n, n));
    apply_matrix(m[r], in.subspan(r * n, n), out.subspan(r * n, n));
  }
}

AxisPermutation AxisPermutation::make(int width, std::span<const int> qubits) {
  const int g = static_cast<int>(qubits.size());
  if (width < 1 || width > 62 || g < 1 || g > width)
    throw InvalidArgument("AxisPermutation: invalid widths");
  std::uint64_t group_mask = 0;
  for (int q : qubits) {
    if (q < 0 || q >= width) throw InvalidArgument("AxisPermutation: qubit out of range");
    const std::uint64_t bit = std::uint64_t{1} << (width - 1 - q);
    if (group_mask & bit) throw InvalidArgument("AxisPermutation: repeated qubit");
    group_mask |= bit;
  }
  AxisPermutation p;
  p.width = width;
  p.group_width = g;
  p.local.resize(std::size_t{1} << g);
  for (std::uint64_t l = 0; l < p.local.size(); ++l) {
    std::uint64_t idx = 0;
    for (int j = 0; j < g; ++j)
      if (l >> (g - 1 - j) & 1) idx |= std::uint64_t{1} << (width - 1 - qubits[j]);
    p.local[l] = idx;
  }
  // Remaining qubits keep their relative (ascending) order in the lead index.
  std::vector<int> rest;
  for (int q = 0; q < width; ++q)
    if (!(group_mask & (std::uint64_t{1} << (width - 1 - q)))) rest.push_back(q);
  const int lw = width - g;
  p.lead.resize(std::size_t{1} << lw);
  for (std::uint64_t r = 0; r < p.lead.size(); ++r) {
    std::uint64_t idx = 0;
    for (int j = 0; j < lw; ++j)
      if (r >> (lw - 1 - j) & 1) idx |= std::uint64_t{1} << (width - 1 - rest[j]);
    p.lead[r] = idx;
  }
  return p;
}

void gather(const AxisPermutation& p, std::size_t batch, std::span<const Complex> src,
            std::span<Complex> dst) {
  const std::size_t dim = std::size_t{1} << p.width;
  const std::size_t nl = p.local.size();
  const std::size_t nr = p.lead.size();
  if (src.size() != batch * dim || dst.size() != src.size())
    throw InvalidArgument("gather: buffer size mismatch");
  const auto total = static_cast<std::ptrdiff_t>(batch * nr);
  [[maybe_unused]] const int nt = threads_for(batch * dim);
#pragma omp parallel for num_threads(nt) schedule(static) if (nt > 1)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const std::size_t b = static_cast<std::size_t>(t) / nr;
    const std::size_t r = static_cast<std::size_t>(t) % nr;
    const Complex* s = src.data() + b * dim + p.lead[r];
    Complex* d = dst.data() + static_cast<std::size_t>(t) * nl;
    for (std::size_t l = 0; l < nl; ++l) d[l] = s[p.local[l]];
  }
}

void scatter(const AxisPermutation& p, std::size_t batch, std::span<const Complex> src,
             std::span<Complex> dst) {
  const std::size_t dim = std::size_t{1} << p.width;
  const std::size_t nl = p.local.size();
  const std::size_t nr = p.lead.size();
  if (dst.size() != batch * dim || dst.size() != src.size())
    throw InvalidArgument("scatter: buffer size mismatch");
  const auto total = static_cast<std::ptrdiff_t>(batch * nr);
  [[maybe_unused]] const int nt = threads_for(batch * dim);
#pragma omp parallel for num_threads(nt) schedule(static) if (nt > 1)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const std::size_t b = static_cast<std::size_t>(t) / nr;
    const std::size_t r = static_cast<std::size_t>(t) % nr;
    Complex* d = dst.data() + b * dim + p.lead[r];
    const Complex* s = src.data() + static_cast<std::size_t>(t) * nl;
    for (std::size_t l = 0; l < nl; ++l) d[p.local[l]] = s[l];
  }
}

namespace reference {

void apply_matrix(const Matrix& m, std::span<const Complex> in, std::span<Complex> out) {
  check_block(m, in, out);
  const std::size_t n = m.cols();
  for (std::size_t r = 0; r < in.size() / n; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      Complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += m(i, k) * in[r * n + k];
      out[r * n + i] = acc;
    }
}

void apply_combined(const Matrix& a, Complex fa, const Matrix& b, Complex fb,
                    std::span<const Complex> in, std::span<Complex> out) {
  Matrix m = fa * a;
  m += fb * b;
  apply_matrix(m, in, out);
}

void gather(const AxisPermutation& p, std::size_t batch, std::span<const Complex> src,
            std::span<Complex> dst) {
  const std::size_t dim = std::size_t{1} << p.width;
  std::size_t t = 0;
  for (std::size_t b = 0; b < batch; ++b)
    for (auto lead : p.lead)
      for (auto local : p.local) dst[t++] = src[b * dim + (lead | local)];
}

void scatter(const AxisPermutation& p, std::size_t batch, std::span<const Complex> src,
             std::span<Complex> dst) {
  const std::size_t dim = std::size_t{1} << p.width;
  std::size_t t = 0;
  for (std::size_t b = 0; b < batch; ++b)
    for (auto lead : p.lead)
      for (auto local : p.local) dst[b * dim + (lead | local)] = src[t++];
}

}  // namespace reference
}  // namespace kronsim::kernels
