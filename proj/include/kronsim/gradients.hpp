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
#include <numbers>
#include <optional>
#include <vector>

#include "kronsim/circuit.hpp"
#include "kronsim/executor.hpp"
#include "kronsim/state.hpp"

namespace kronsim {

/// Mean of ⟨Z⟩ over `wires` (all wires when empty) and over the batch.
struct LossSpec {
  std::vector<int> wires;
};

double evaluate_loss(const StateVector& state, const LossSpec& loss);

/// Smooth reparameterisation θ' = range·tanh(θ), applied to every parameter
/// whose `remap` flag is set when `enabled`.
struct RemapConfig {
  bool enabled = false;
  double range = std::numbers::pi;
};

double remap(double theta, const RemapConfig& cfg);
/// dθ'/dθ.
double remap_derivative(double theta, const RemapConfig& cfg);

/// Angle each gate sees after remapping (NaN for non-parametric gates).
std::vector<double> effective_angles(const Circuit& circuit, const ParamStore& params,
                                     const RemapConfig& cfg);

struct LossAndGradient {
  double loss = 0.0;
  std::vector<double> gradient;  // one entry per parameter
  StateVector final_state;
};

/// Parameter-shift gradient: ½·[L(θ'+π/2) − L(θ'−π/2)] per rotation, summed over
/// the gates sharing a parameter, times the remap chain factor. Each shifted
/// evaluation reuses the forward state up to the step that holds the gate.
LossAndGradient param_shift(const Executor& exec, const ParamStore& params, const LossSpec& loss,
                            const RemapConfig& cfg, const StateVector& input);

std::vector<double> param_shift_grad(const Executor& exec, const ParamStore& params,
                                     const LossSpec& loss, const RemapConfig& cfg,
                                     const StateVector& input);
/// Convenience form: cached executor, |0…0⟩ input.
std::vector<double> param_shift_grad(const Circuit& circuit, const ParamStore& params,
                                     const LossSpec& loss, const RemapConfig& cfg = {});

/// Central differences in the raw parameters, remapping applied inside the loss.
std::vector<double> finite_diff_grad(const Executor& exec, const ParamStore& params,
                                     const LossSpec& loss, const RemapConfig& cfg,
                                     const StateVector& input, double eps = 1e-5);
std::vector<double> finite_diff_grad(const Circuit& circuit, const ParamStore& params,
                                     const LossSpec& loss, const RemapConfig& cfg = {},
                                     double eps = 1e-5);

/// `points` evenly spaced angles over [lo, hi] (a single point sits at lo).
std::vector<double> landscape_grid(std::size_t points = 64, double lo = -std::numbers::pi,
                                   double hi = std::numbers::pi);

/// |∂L/∂θ_i| with θ_i swept over `grid` and every other parameter held fixed.
/// Rows are parameter indices, columns grid angles.
struct Landscape {
  std::vector<double> grid;
  std::vector<std::vector<double>> values;
};

Landscape gradient_landscape(const Executor& exec, const ParamStore& params, const LossSpec& loss,
                             const RemapConfig& cfg, const std::vector<double>& grid,
                             const StateVector& input);
Landscape gradient_landscape(const Circuit& circuit, const ParamStore& params, const LossSpec& loss,
                             const RemapConfig& cfg, const std::vector<double>& grid);

}  // namespace kronsim
