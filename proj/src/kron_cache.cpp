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

#include "kronsim/kron_cache.hpp"

#include <string>

#include "kronsim/kernels.hpp"

namespace kronsim {
namespace {

void check_qubits(std::span<const int> qubits, int width) {
  if (width < 1 || width > 30) throw InvalidArgument("expand: width must be in [1, 30]");
  for (int q : qubits)
    if (q < 0 || q >= width) throw InvalidArgument("expand: qubit index out of range");
  if (qubits.size() == 2 && qubits[0] == qubits[1])
    throw InvalidArgument("expand: two-qubit gate on a single qubit");
}

Matrix swap_conjugate(const Matrix& m) {
  // SWAP·m·SWAP: exchange the roles of the two bits of a 4×4 index.
  constexpr int kSwap[4] = {0, 2, 1, 3};
  Matrix out(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = m(kSwap[i], kSwap[j]);
  return out;
}

Matrix three_factor(const Matrix& m, int w, int k, int width) {
  return kron(kron(Matrix::identity(std::size_t{1} << w), m),
              Matrix::identity(std::size_t{1} << (width - w - k)));
}

}  // namespace

void CacheAccount::charge(std::size_t entries, const char* what) {
  if (entries > limit_ - used_)
    throw CacheBudgetExceeded(std::string(what) + ": expanded matrices need " +
                              std::to_string(used_ + entries) + " complex entries, budget is " +
                              std::to_string(limit_) + "; split the circuit into narrower groups");
  used_ += entries;
}

std::size_t expanded_entries(bool parametric, int width) {
  const std::size_t one = std::size_t{1} << (2 * width);
  return parametric ? 2 * one : one;
}

Matrix ExpandedGateCache::evaluate(std::optional<double> theta) const {
  if (!parametric()) return a;
  if (!theta) throw InvalidArgument("ExpandedGateCache: parametric gate needs an angle");
  Matrix m = kronsim::evaluate(f_a, *theta) * a;
  m += kronsim::evaluate(f_b, *theta) * b;
  return m;
}

Matrix expand_matrix(const Matrix& m, std::span<const int> qubits, int width) {
  check_qubits(qubits, width);
  const std::size_t k = qubits.size();
  if (k == 0 || k > 2 || m.rows() != (std::size_t{1} << k) || m.cols() != m.rows())
    throw InvalidArgument("expand_matrix: matrix size does not match qubit count");
  if (k == 1) return three_factor(m, qubits[0], 1, width);

  const int c = qubits[0], t = qubits[1];
  if (t == c + 1) return three_factor(m, c, 2, width);
  if (c == t + 1) return three_factor(swap_conjugate(m), t, 2, width);

  // Non-adjacent pair: expand with the pair trailing, then relabel basis states.
  const Matrix trailing = three_factor(m, width - 2, 2, width);
  const auto perm = kernels::AxisPermutation::make(width, qubits);
  std::vector<std::uint64_t> to_global(std::size_t{1} << width);
  for (std::size_t r = 0; r < perm.lead.size(); ++r)
    for (std::size_t l = 0; l < perm.local.size(); ++l)
      to_global[r * perm.local.size() + l] = perm.lead[r] | perm.local[l];
  Matrix out(trailing.rows(), trailing.cols());
  for (std::size_t i = 0; i < trailing.rows(); ++i)
    for (std::size_t j = 0; j < trailing.cols(); ++j)
      out(to_global[i], to_global[j]) = trailing(i, j);
  return out;
}

ExpandedGateCache expand(const PartialDecomposition& decomp, int w, int width,
                         CacheAccount* account) {
  const int q[1] = {w};
  check_qubits(q, width);
  if (account) account->charge(expanded_entries(true, width), "expand");
  ExpandedGateCache cache;
  cache.kind = decomp.kind;
  cache.qubits = {w};
  cache.width = width;
  cache.a = expand_matrix(decomp.a, q, width);
  cache.b = expand_matrix(decomp.b, q, width);
  cache.f_a = decomp.f_a;
  cache.f_b = decomp.f_b;
  return cache;
}

ExpandedGateCache expand(GateKind kind, std::span<const int> qubits, int width,
                         CacheAccount* account) {
  if (is_parametric(kind)) throw InvalidArgument("expand: use the decomposition for parametric gates");
  if (qubits.size() != static_cast<std::size_t>(arity(kind)))
    throw InvalidArgument("expand: qubit count does not match gate arity");
  check_qubits(qubits, width);
  if (account) account->charge(expanded_entries(false, width), "expand");
  ExpandedGateCache cache;
  cache.kind = kind;
  cache.qubits.assign(qubits.begin(), qubits.end());
  cache.width = width;
  cache.a = expand_matrix(fixed_matrix(kind), qubits, width);
  return cache;
}

ExpandedGateCache expand_gate(GateKind kind, std::span<const int> qubits, int width,
                              CacheAccount* account) {
  if (!is_parametric(kind)) return expand(kind, qubits, width, account);
  if (qubits.size() != 1) throw InvalidArgument("expand_gate: rotation acts on one qubit");
  return expand(decompose(kind), qubits[0], width, account);
}

void apply_cached_into(const ExpandedGateCache& cache, std::optional<double> theta,
                       const StateVector& state, StateVector& out) {
  if (state.width() != cache.width)
    throw InvalidArgument("apply_cached: state width " + std::to_string(state.width()) +
                          " does not match cache width " + std::to_string(cache.width));
  if (cache.parametric() != theta.has_value())
    throw InvalidArgument("apply_cached: angle must be given exactly for parametric gates");
  if (out.width() != state.width() || out.batch() != state.batch())
    out = StateVector(state.width(), state.batch());
  if (cache.parametric())
    kernels::apply_combined(cache.a, evaluate(cache.f_a, *theta), cache.b,
                            evaluate(cache.f_b, *theta), state.amplitudes(), out.amplitudes());
  else
    kernels::apply_matrix(cache.a, state.amplitudes(), out.amplitudes());
}

StateVector apply_cached(const ExpandedGateCache& cache, std::optional<double> theta,
                         const StateVector& state) {
  StateVector out;
  apply_cached_into(cache, theta, state, out);
  return out;
}

std::size_t EmbeddingCache::entries() const {
  std::size_t n = 0;
  for (const auto& m : stacked_a) n += m.size();
  for (const auto& m : stacked_b) n += m.size();
  return n;
}

EmbeddingCache build_embedding_cache(std::span<const GateKind> axes, int width,
                                     CacheAccount* account) {
  if (width < 1 || static_cast<int>(axes.size()) != width)
    throw InvalidArgument("build_embedding_cache: need one rotation kind per wire");
  if (account)
    account->charge(static_cast<std::size_t>(width) * expanded_entries(true, width),
                    "build_embedding_cache");
  EmbeddingCache cache;
  cache.width = width;
  cache.axes.assign(axes.begin(), axes.end());
  for (int k = 0; k < width; ++k) {
    const auto decomp = decompose(axes[k]);
    const int q[1] = {k};
    cache.stacked_a.push_back(expand_matrix(decomp.a, q, width));
    cache.stacked_b.push_back(expand_matrix(decomp.b, q, width));
  }
  return cache;
}

StateVector embedding_forward(const EmbeddingCache& cache, std::span<const double> angles,
                              const StateVector& state) {
  const auto w = static_cast<std::size_t>(cache.width);
  if (state.width() != cache.width) throw InvalidArgument("embedding_forward: width mismatch");
  const bool shared = angles.size() == w;
  if (!shared && angles.size() != w * state.batch())
    throw InvalidArgument("embedding_forward: expected W or batch*W angles");

  // The partial functions are identical for every supported axis.
  const Coefficient fa = Coefficient::CosHalf, fb = Coefficient::MinusISinHalf;
  StateVector cur = state;
  StateVector next(state.width(), state.batch());
  std::vector<Complex> ca(state.batch()), cb(state.batch());
  for (std::size_t k = 0; k < w; ++k) {
    if (shared) {
      kernels::apply_combined(cache.stacked_a[k], evaluate(fa, angles[k]), cache.stacked_b[k],
                              evaluate(fb, angles[k]), cur.amplitudes(), next.amplitudes());
    } else {
      for (std::size_t b = 0; b < state.batch(); ++b) {
        ca[b] = evaluate(fa, angles[b * w + k]);
        cb[b] = evaluate(fb, angles[b * w + k]);
      }
      kernels::apply_combined_per_row(cache.stacked_a[k], ca, cache.stacked_b[k], cb,
                                      cur.amplitudes(), next.amplitudes());
    }
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace kronsim
