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

#include "kronsim/executor.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "kronsim/gates.hpp"

namespace kronsim {
namespace {

std::optional<double> angle_of(const GateInstance& gate, std::span<const double> angles, std::size_t g) {
  if (!is_parametric(gate.kind)) return std::nullopt;
  return angles[g];
}

std::vector<int> local_qubits(const SubCircuitGroup& group, const GateInstance& gate) {
  std::vector<int> local;
  for (int q : gate.qubits) {
    const int l = group.local_index(q);
    if (l < 0) throw InvalidArgument("gate touches a qubit outside its group");
    local.push_back(l);
  }
  return local;
}

// Applies a 2^g matrix to the group's qubits of `state`, using `scratch` for the
// reshaped copy.
void apply_on_axes(const kernels::AxisPermutation& perm, const Matrix& u, StateVector& state,
                   std::vector<Complex>& a, std::vector<Complex>& b) {
  a.resize(state.amplitudes().size());
  b.resize(a.size());
  kernels::gather(perm, state.batch(), state.amplitudes(), a);
  kernels::apply_matrix(u, a, b);
  kernels::scatter(perm, state.batch(), b, state.amplitudes());
}

}  // namespace

std::string_view mode_name(ExecMode mode) {
  switch (mode) {
    case ExecMode::Cached:
      return "cached";
    case ExecMode::Naive:
      return "naive";
    case ExecMode::Split:
      return "split";
  }
  return "?";
}

GroupUnitary group_unitary(const SubCircuitGroup& group, const Circuit& circuit,
                           const ParamStore& params, std::size_t cache_budget) {
  const int g = group.width();
  if (g < 1) throw InvalidArgument("group_unitary: empty group");
  CacheAccount account(cache_budget);
  const auto angles = gate_angles(circuit, params);
  Matrix u = Matrix::identity(std::size_t{1} << g);
  for (std::size_t gi : group.gates) {
    const auto& gate = circuit.gates.at(gi);
    const auto local = local_qubits(group, gate);
    const auto cache = expand_gate(gate.kind, local, g, &account);
    u = cache.evaluate(angle_of(gate, angles, gi)) * u;
  }
  return GroupUnitary{group, std::move(u)};
}

StateVector apply_group(const StateVector& state, const GroupUnitary& gu) {
  for (int q : gu.group.qubits)
    if (q < 0 || q >= state.width()) throw InvalidArgument("apply_group: qubit out of range");
  if (gu.u.rows() != (std::size_t{1} << gu.group.width()))
    throw InvalidArgument("apply_group: unitary size does not match group width");
  const auto perm = kernels::AxisPermutation::make(state.width(), gu.group.qubits);
  StateVector out = state;
  std::vector<Complex> a, b;
  apply_on_axes(perm, gu.u, out, a, b);
  return out;
}

Executor::Executor(Circuit circuit, ExecOptions options)
    : circuit_(std::move(circuit)), options_(std::move(options)) {
  require_valid(circuit_);
  const int w = circuit_.num_qubits;
  CacheAccount account(options_.cache_budget);
  step_of_gate_.resize(circuit_.gates.size());

  switch (options_.mode) {
    case ExecMode::Cached:
      full_width_.reserve(circuit_.gates.size());
      for (std::size_t g = 0; g < circuit_.gates.size(); ++g) {
        const auto& gate = circuit_.gates[g];
        full_width_.push_back(expand_gate(gate.kind, gate.qubits, w, &account));
        step_of_gate_[g] = g;
      }
      break;
    case ExecMode::Naive:
      for (std::size_t g = 0; g < circuit_.gates.size(); ++g) step_of_gate_[g] = g;
      break;
    case ExecMode::Split: {
      if (!options_.plan) options_.plan = split_circuit(circuit_, options_.max_qubits);
      const auto report = validate_plan(*options_.plan, circuit_, options_.plan->max_qubits);
      if (!report.ok()) throw InvalidArgument("Executor: invalid split plan: " + report.to_string());
      for (std::size_t s = 0; s < options_.plan->groups.size(); ++s) {
        const auto& group = options_.plan->groups[s];
        GroupProgram prog{group, {}, kernels::AxisPermutation::make(w, group.qubits)};
        for (std::size_t gi : group.gates) {
          const auto& gate = circuit_.gates[gi];
          prog.gates.push_back(expand_gate(gate.kind, local_qubits(group, gate), group.width(), &account));
          step_of_gate_[gi] = s;
        }
        groups_.push_back(std::move(prog));
      }
      break;
    }
  }
  cache_entries_ = account.used();
}

std::size_t Executor::num_steps() const {
  return options_.mode == ExecMode::Split ? groups_.size() : circuit_.gates.size();
}

void Executor::apply_step(std::size_t step, std::span<const double> angles, StateVector& state,
                          StateVector& scratch) const {
  const int w = circuit_.num_qubits;
  switch (options_.mode) {
    case ExecMode::Cached: {
      const auto& gate = circuit_.gates[step];
      apply_cached_into(full_width_[step], angle_of(gate, angles, step), state, scratch);
      std::swap(state, scratch);
      return;
    }
    case ExecMode::Naive: {
      const auto& gate = circuit_.gates[step];
      const Matrix m = expand_matrix(gate_matrix(gate.kind, angle_of(gate, angles, step)), gate.qubits, w);
      if (scratch.width() != w || scratch.batch() != state.batch()) scratch = StateVector(w, state.batch());
      kernels::apply_matrix(m, state.amplitudes(), scratch.amplitudes());
      std::swap(state, scratch);
      return;
    }
    case ExecMode::Split: {
      const auto& prog = groups_[step];
      std::vector<Complex> a, b;
      if (options_.fuse_groups) {
        Matrix u;
        for (std::size_t k = 0; k < prog.gates.size(); ++k) {
          const std::size_t gi = prog.group.gates[k];
          Matrix m = prog.gates[k].evaluate(angle_of(circuit_.gates[gi], angles, gi));
          u = k == 0 ? std::move(m) : m * u;
        }
        apply_on_axes(prog.perm, u, state, a, b);
      } else {
        for (std::size_t k = 0; k < prog.gates.size(); ++k) {
          const std::size_t gi = prog.group.gates[k];
          apply_on_axes(prog.perm, prog.gates[k].evaluate(angle_of(circuit_.gates[gi], angles, gi)),
                        state, a, b);
        }
      }
      return;
    }
  }
}

StateVector Executor::run_steps(std::size_t first, std::size_t last, std::span<const double> angles,
                                StateVector state) const {
  if (angles.size() != circuit_.gates.size())
    throw InvalidArgument("Executor: expected one angle per gate");
  if (state.width() != circuit_.num_qubits)
    throw InvalidArgument("Executor: input state width " + std::to_string(state.width()) +
                          " does not match circuit width " + std::to_string(circuit_.num_qubits));
  if (first > last || last > num_steps()) throw InvalidArgument("Executor: step range out of bounds");
  StateVector scratch;
  for (std::size_t s = first; s < last; ++s) apply_step(s, angles, state, scratch);
  return state;
}

StateVector Executor::run(std::span<const double> angles, const StateVector& input) const {
  return run_steps(0, num_steps(), angles, input);
}

StateVector Executor::run(const ParamStore& params, const StateVector* input) const {
  const auto angles = gate_angles(circuit_, params);
  return input ? run(angles, *input) : run(angles, zero_state(circuit_.num_qubits));
}

std::vector<StateVector> Executor::trace(std::span<const double> angles, const StateVector& input) const {
  std::vector<StateVector> states;
  states.reserve(num_steps() + 1);
  states.push_back(input);
  for (std::size_t s = 0; s < num_steps(); ++s)
    states.push_back(run_steps(s, s + 1, angles, states.back()));
  return states;
}

StateVector run(const Circuit& circuit, const ParamStore& params, const SplitPlan* plan,
                const StateVector* input) {
  ExecOptions opts;
  if (plan) {
    opts.mode = ExecMode::Split;
    opts.plan = *plan;
  }
  const Executor exec(circuit, std::move(opts));
  return exec.run(params, input);
}

EmbeddingLayer::EmbeddingLayer(std::vector<GateKind> axes, ExecMode mode, std::size_t cache_budget)
    : axes_(std::move(axes)), mode_(mode) {
  if (axes_.empty()) throw InvalidArgument("EmbeddingLayer: need at least one wire");
  for (auto k : axes_)
    if (!is_parametric(k)) throw InvalidArgument("EmbeddingLayer: axes must be rotations");
  if (mode_ == ExecMode::Cached) {
    CacheAccount account(cache_budget);
    cache_ = build_embedding_cache(axes_, width(), &account);
  }
}

StateVector EmbeddingLayer::forward(std::span<const double> angles, const StateVector& input) const {
  const auto w = static_cast<std::size_t>(width());
  if (input.width() != width()) throw InvalidArgument("EmbeddingLayer: width mismatch");
  const bool shared = angles.size() == w;
  if (!shared && angles.size() != w * input.batch())
    throw InvalidArgument("EmbeddingLayer: expected W or batch*W angles");
  auto angle = [&](std::size_t b, std::size_t k) { return shared ? angles[k] : angles[b * w + k]; };

  if (mode_ == ExecMode::Cached) return embedding_forward(*cache_, angles, input);

  StateVector cur = input;
  StateVector next(input.width(), input.batch());
  const std::size_t dim = input.dim();
  if (mode_ == ExecMode::Naive) {
    for (std::size_t k = 0; k < w; ++k) {
      const int q[1] = {static_cast<int>(k)};
      for (std::size_t b = 0; b < input.batch(); ++b) {
        const Matrix m = expand_matrix(gate_matrix(axes_[k], angle(b, k)), q, width());
        kernels::apply_matrix(m, cur.row(b), next.row(b));
      }
      std::swap(cur, next);
    }
    return cur;
  }

  // Split: each wire is a width-1 group; rows of batch b occupy one contiguous block.
  std::vector<Complex> a(cur.amplitudes().size()), c(a.size());
  for (std::size_t k = 0; k < w; ++k) {
    const int q[1] = {static_cast<int>(k)};
    const auto perm = kernels::AxisPermutation::make(width(), q);
    const auto decomp = decompose(axes_[k]);
    kernels::gather(perm, cur.batch(), cur.amplitudes(), a);
    for (std::size_t b = 0; b < input.batch(); ++b) {
      const std::span<const Complex> in(a.data() + b * dim, dim);
      kernels::apply_matrix(decomp.evaluate(angle(b, k)), in, std::span<Complex>(c.data() + b * dim, dim));
    }
    kernels::scatter(perm, cur.batch(), c, cur.amplitudes());
  }
  return cur;
}

std::vector<double> expectation_z(const StateVector& state, int wire) {
  if (wire < 0 || wire >= state.width()) throw InvalidArgument("expectation_z: wire out of range");
  const std::size_t bit = std::size_t{1} << (state.width() - 1 - wire);
  std::vector<double> out(state.batch(), 0.0);
  for (std::size_t b = 0; b < state.batch(); ++b) {
    const auto row = state.row(b);
    double s = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) s += (i & bit ? -1.0 : 1.0) * std::norm(row[i]);
    out[b] = s;
  }
  return out;
}

std::vector<std::vector<double>> probabilities(const StateVector& state) {
  std::vector<std::vector<double>> out(state.batch());
  for (std::size_t b = 0; b < state.batch(); ++b) {
    out[b].reserve(state.dim());
    for (const auto& a : state.row(b)) out[b].push_back(std::norm(a));
  }
  return out;
}

}  // namespace kronsim
