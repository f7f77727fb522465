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

#include "kronsim/gradients.hpp"

#include <cmath>
#include <limits>

namespace kronsim {
namespace {

constexpr double kShift = std::numbers::pi / 2;

struct Shift {
  std::size_t gate;
  std::size_t param;
};

std::vector<Shift> shifts_for(const Circuit& circuit, std::optional<std::size_t> only_param) {
  std::vector<Shift> out;
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& gate = circuit.gates[g];
    if (!gate.angle) continue;
    const auto* p = std::get_if<ParamIndex>(&*gate.angle);
    if (!p) continue;
    if (!is_parametric(gate.kind))
      throw InvalidArgument("param_shift: unsupported parametric gate " + std::string(gate_name(gate.kind)));
    if (only_param && p->value != *only_param) continue;
    out.push_back(Shift{g, p->value});
  }
  return out;
}

// Σ over gates carrying `param` (or all parameters) of the shift differences,
// reusing the forward trace.
std::vector<double> shift_gradient(const Executor& exec, const ParamStore& params, const LossSpec& loss,
                                   const RemapConfig& cfg, const std::vector<double>& angles,
                                   const std::vector<StateVector>& states,
                                   std::optional<std::size_t> only_param) {
  const auto shifts = shifts_for(exec.circuit(), only_param);
  const std::size_t last = exec.num_steps();
  std::vector<double> diffs(shifts.size(), 0.0);

  // Results land in fixed slots and are reduced in order, so the schedule
  // cannot change the sum.
#pragma omp parallel for schedule(dynamic) if (shifts.size() > 1)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(shifts.size()); ++k) {
    const auto& s = shifts[static_cast<std::size_t>(k)];
    const std::size_t step = exec.step_of_gate(s.gate);
    std::vector<double> shifted = angles;
    shifted[s.gate] = angles[s.gate] + kShift;
    const double plus = evaluate_loss(exec.run_steps(step, last, shifted, states[step]), loss);
    shifted[s.gate] = angles[s.gate] - kShift;
    const double minus = evaluate_loss(exec.run_steps(step, last, shifted, states[step]), loss);
    diffs[static_cast<std::size_t>(k)] = 0.5 * (plus - minus);
  }

  std::vector<double> grad(params.size(), 0.0);
  for (std::size_t k = 0; k < shifts.size(); ++k) grad[shifts[k].param] += diffs[k];
  for (std::size_t p = 0; p < params.size(); ++p)
    if (cfg.enabled && params[p].remap) grad[p] *= remap_derivative(params[p].value, cfg);
  return grad;
}

}  // namespace

double evaluate_loss(const StateVector& state, const LossSpec& loss) {
  std::vector<int> wires = loss.wires;
  if (wires.empty())
    for (int w = 0; w < state.width(); ++w) wires.push_back(w);
  double total = 0.0;
  for (int w : wires)
    for (double z : expectation_z(state, w)) total += z;
  return total / static_cast<double>(wires.size() * state.batch());
}

double remap(double theta, const RemapConfig& cfg) {
  return cfg.enabled ? cfg.range * std::tanh(theta) : theta;
}

double remap_derivative(double theta, const RemapConfig& cfg) {
  if (!cfg.enabled) return 1.0;
  const double t = std::tanh(theta);
  return cfg.range * (1.0 - t * t);
}

std::vector<double> effective_angles(const Circuit& circuit, const ParamStore& params,
                                     const RemapConfig& cfg) {
  std::vector<double> out(circuit.gates.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& gate = circuit.gates[g];
    if (!gate.angle) continue;
    if (const auto* p = std::get_if<ParamIndex>(&*gate.angle)) {
      const auto& param = params[p->value];
      out[g] = param.remap ? remap(param.value, cfg) : param.value;
    } else {
      out[g] = std::get<double>(*gate.angle);
    }
  }
  return out;
}

LossAndGradient param_shift(const Executor& exec, const ParamStore& params, const LossSpec& loss,
                            const RemapConfig& cfg, const StateVector& input) {
  const auto angles = effective_angles(exec.circuit(), params, cfg);
  auto states = exec.trace(angles, input);
  LossAndGradient out;
  out.loss = evaluate_loss(states.back(), loss);
  out.gradient = shift_gradient(exec, params, loss, cfg, angles, states, std::nullopt);
  out.final_state = std::move(states.back());
  return out;
}

std::vector<double> param_shift_grad(const Executor& exec, const ParamStore& params,
                                     const LossSpec& loss, const RemapConfig& cfg,
                                     const StateVector& input) {
  return param_shift(exec, params, loss, cfg, input).gradient;
}

std::vector<double> param_shift_grad(const Circuit& circuit, const ParamStore& params,
                                     const LossSpec& loss, const RemapConfig& cfg) {
  const Executor exec(circuit);
  return param_shift_grad(exec, params, loss, cfg, zero_state(circuit.num_qubits));
}

std::vector<double> finite_diff_grad(const Executor& exec, const ParamStore& params,
                                     const LossSpec& loss, const RemapConfig& cfg,
                                     const StateVector& input, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("finite_diff_grad: eps must be positive");
  std::vector<double> grad(params.size(), 0.0);
  ParamStore work = params;
  auto eval = [&] { return evaluate_loss(exec.run(effective_angles(exec.circuit(), work, cfg), input), loss); };
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double v = params[i].value;
    work[i].value = v + eps;
    const double plus = eval();
    work[i].value = v - eps;
    const double minus = eval();
    work[i].value = v;
    grad[i] = (plus - minus) / (2 * eps);
  }
  return grad;
}

std::vector<double> finite_diff_grad(const Circuit& circuit, const ParamStore& params,
                                     const LossSpec& loss, const RemapConfig& cfg, double eps) {
  const Executor exec(circuit);
  return finite_diff_grad(exec, params, loss, cfg, zero_state(circuit.num_qubits), eps);
}

std::vector<double> landscape_grid(std::size_t points, double lo, double hi) {
  if (points == 0) throw InvalidArgument("landscape_grid: need at least one point");
  std::vector<double> grid(points);
  for (std::size_t k = 0; k < points; ++k)
    grid[k] = points == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1);
  return grid;
}

Landscape gradient_landscape(const Executor& exec, const ParamStore& params, const LossSpec& loss,
                             const RemapConfig& cfg, const std::vector<double>& grid,
                             const StateVector& input) {
  Landscape out;
  out.grid = grid;
  out.values.assign(params.size(), std::vector<double>(grid.size(), 0.0));
  ParamStore work = params;
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t c = 0; c < grid.size(); ++c) {
      work[i].value = grid[c];
      const auto angles = effective_angles(exec.circuit(), work, cfg);
      const auto states = exec.trace(angles, input);
      out.values[i][c] = std::abs(shift_gradient(exec, work, loss, cfg, angles, states, i)[i]);
    }
    work[i].value = params[i].value;
  }
  return out;
}

Landscape gradient_landscape(const Circuit& circuit, const ParamStore& params, const LossSpec& loss,
                             const RemapConfig& cfg, const std::vector<double>& grid) {
  const Executor exec(circuit);
  return gradient_landscape(exec, params, loss, cfg, grid, zero_state(circuit.num_qubits));
}

}  // namespace kronsim
