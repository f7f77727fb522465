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
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kronsim/circuit.hpp"
#include "kronsim/gates.hpp"
#include "kronsim/matrix.hpp"
#include "kronsim/state.hpp"

namespace kronsim {

/// Raised when expanded matrices would not fit the configured budget; the fix is
/// to split the circuit into narrower groups.
class CacheBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on expanded-matrix storage: 2^26 complex entries (1 GiB).
inline constexpr std::size_t kDefaultCacheBudget = std::size_t{1} << 26;

/// Running total of expanded-matrix entries charged against a cap.
class CacheAccount {
 public:
  explicit CacheAccount(std::size_t limit = kDefaultCacheBudget) : limit_(limit) {}

  /// Adds `entries` to the total or throws CacheBudgetExceeded.
  void charge(std::size_t entries, const char* what);

  std::size_t used() const { return used_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

/// Complex entries needed to hold one expanded gate at `width` qubits.
std::size_t expanded_entries(bool parametric, int width);

/// A gate's constant matrices expanded to `width` qubits. Parametric gates keep
/// both partials (a, b); fixed gates keep the single expanded matrix in `a`.
struct ExpandedGateCache {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;  // positions within `width`
  int width = 0;
  Matrix a;
  Matrix b;
  Coefficient f_a = Coefficient::CosHalf;
  Coefficient f_b = Coefficient::MinusISinHalf;

  bool parametric() const { return !b.empty(); }
  std::size_t entries() const { return a.size() + b.size(); }
  /// The full width×width gate matrix at angle θ.
  Matrix evaluate(std::optional<double> theta = std::nullopt) const;
};

/// I_{2^w} ⊗ m ⊗ I_{2^{width−w−k}} for a k-qubit matrix `m` whose qubits
/// occupy consecutive ascending positions starting at w. Two-qubit gates on a
/// reversed or non-adjacent pair are built with the pair on the trailing
/// positions and then relabelled by the basis permutation that puts the pair
/// back; no scattered Kronecker structure is formed.
Matrix expand_matrix(const Matrix& m, std::span<const int> qubits, int width);

ExpandedGateCache expand(const PartialDecomposition& decomp, int w, int width,
                         CacheAccount* account = nullptr);
/// Expands a non-parametric gate (`kind` selects fixed_matrix).
ExpandedGateCache expand(GateKind kind, std::span<const int> qubits, int width,
                         CacheAccount* account = nullptr);
/// Either of the above, chosen by the gate kind.
ExpandedGateCache expand_gate(GateKind kind, std::span<const int> qubits, int width,
                              CacheAccount* account = nullptr);

/// (M_a·f_a(θ) + M_b·f_b(θ))·ψ per row, or M·ψ for a fixed gate. θ must be
/// present iff the gate is parametric.
StateVector apply_cached(const ExpandedGateCache& cache, std::optional<double> theta,
                         const StateVector& state);
/// In-place variant writing into `out` (resized as needed); `out` must not be `state`.
void apply_cached_into(const ExpandedGateCache& cache, std::optional<double> theta,
                       const StateVector& state, StateVector& out);

/// Stacked partials of an embedding layer: slice k holds wire k's rotation
/// expanded to the full width. Logical shape (W, 2^W, 2^W) for each stack.
struct EmbeddingCache {
  int width = 0;
  std::vector<GateKind> axes;
  std::vector<Matrix> stacked_a;
  std::vector<Matrix> stacked_b;

  std::size_t entries() const;
};

EmbeddingCache build_embedding_cache(std::span<const GateKind> axes, int width,
                                     CacheAccount* account = nullptr);

/// Applies one rotation per wire, in wire order. `angles` is either W angles
/// shared by every batch row or batch·W angles (row-major, one set per row).
StateVector embedding_forward(const EmbeddingCache& cache, std::span<const double> angles,
                              const StateVector& state);

}  // namespace kronsim
