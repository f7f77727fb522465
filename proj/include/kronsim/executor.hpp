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
#include <string_view>
#include <vector>

#include "kronsim/circuit.hpp"
#include "kronsim/kernels.hpp"
#include "kronsim/kron_cache.hpp"
#include "kronsim/splitter.hpp"
#include "kronsim/state.hpp"

namespace kronsim {

/// How an Executor turns gates into matrix products.
enum class ExecMode {
  Cached,  // expanded partials built once at full width, combined per pass
  Naive,   // full-width Kronecker products rebuilt on every pass
  Split    // bounded-width groups applied through an axis permutation
};

std::string_view mode_name(ExecMode mode);

struct ExecOptions {
  ExecMode mode = ExecMode::Cached;
  int max_qubits = 4;                       // Split only; ignored when `plan` is set
  std::optional<SplitPlan> plan;            // Split only; computed when absent
  std::size_t cache_budget = kDefaultCacheBudget;
  bool fuse_groups = true;                  // Split: one unitary per group vs gate-by-gate
};

struct GroupUnitary {
  SubCircuitGroup group;
  Matrix u;  // 2^g × 2^g
};

/// Product of the group's gates expanded at the group width, later gates on the
/// left. Local qubit j is group.qubits[j].
GroupUnitary group_unitary(const SubCircuitGroup& group, const Circuit& circuit,
                           const ParamStore& params, std::size_t cache_budget = kDefaultCacheBudget);

/// Moves the group's qubits to the trailing axis, multiplies every
/// (B·2^{W−g}, 2^g) row by U, and restores the original layout.
StateVector apply_group(const StateVector& state, const GroupUnitary& gu);

/// A circuit prepared for repeated execution. Construction pays for all
/// parameter-independent work (expansion, planning); runs only evaluate the
/// angle-dependent coefficients. Immutable and safe to share across threads.
class Executor {
 public:
  explicit Executor(Circuit circuit, ExecOptions options = {});

  const Circuit& circuit() const { return circuit_; }
  ExecMode mode() const { return options_.mode; }
  const SplitPlan* plan() const { return options_.plan ? &*options_.plan : nullptr; }
  std::size_t cache_entries() const { return cache_entries_; }

  /// Execution is a sequence of steps: one per gate, or one per group in Split mode.
  std::size_t num_steps() const;
  std::size_t step_of_gate(std::size_t gate) const { return step_of_gate_.at(gate); }

  /// `angles` holds one entry per gate (ignored for non-parametric gates).
  StateVector run(std::span<const double> angles, const StateVector& input) const;
  StateVector run(const ParamStore& params, const StateVector* input = nullptr) const;

  /// Runs steps [first, last) on `state`.
  StateVector run_steps(std::size_t first, std::size_t last, std::span<const double> angles,
                        StateVector state) const;

  /// States before every step plus the final state (num_steps() + 1 entries).
  std::vector<StateVector> trace(std::span<const double> angles, const StateVector& input) const;

 private:
  struct GroupProgram {
    SubCircuitGroup group;
    std::vector<ExpandedGateCache> gates;  // at group width
    kernels::AxisPermutation perm;
  };

  void apply_step(std::size_t step, std::span<const double> angles, StateVector& state,
                  StateVector& scratch) const;

  Circuit circuit_;
  ExecOptions options_;
  std::vector<ExpandedGateCache> full_width_;  // Cached
  std::vector<GroupProgram> groups_;           // Split
  std::vector<std::size_t> step_of_gate_;
  std::size_t cache_entries_ = 0;
};

/// One-shot execution: cached full-width path without a plan, group path with one.
StateVector run(const Circuit& circuit, const ParamStore& params, const SplitPlan* plan = nullptr,
                const StateVector* input = nullptr);

/// One rotation per wire with per-row angles (classical input encoding).
class EmbeddingLayer {
 public:
  EmbeddingLayer(std::vector<GateKind> axes, ExecMode mode,
                 std::size_t cache_budget = kDefaultCacheBudget);

  int width() const { return static_cast<int>(axes_.size()); }
  /// `angles`: W shared angles or batch·W row-major angles.
  StateVector forward(std::span<const double> angles, const StateVector& input) const;

 private:
  std::vector<GateKind> axes_;
  ExecMode mode_;
  std::optional<EmbeddingCache> cache_;
};

/// ⟨Z_wire⟩ for every batch row.
std::vector<double> expectation_z(const StateVector& state, int wire);

/// |amplitude|² for every batch row.
std::vector<std::vector<double>> probabilities(const StateVector& state);

}  // namespace kronsim
