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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kronsim {

enum class GateKind { RX, RY, RZ, H, X, Y, Z, CNOT, CZ };

bool is_parametric(GateKind kind);
/// Number of qubits the gate acts on (1 or 2).
int arity(GateKind kind);
/// Lower-case mnemonic, identical to the OpenQASM gate name ("rx", "cx", ...).
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(std::string_view name);

struct ParamIndex {
  std::size_t value = 0;
  friend bool operator==(ParamIndex, ParamIndex) = default;
};

/// Angle of a parametric gate: a trainable parameter or a fixed angle in radians.
using AngleSource = std::variant<ParamIndex, double>;

struct GateInstance {
  GateKind kind = GateKind::H;
  std::vector<int> qubits;  // control first for CNOT/CZ
  std::optional<AngleSource> angle;

  friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

struct Parameter {
  std::string name;
  double value = 0.0;  // radians
  bool remap = true;   // subject to weight remapping when enabled
  bool unused = false;
};

class ParamStore {
 public:
  /// Throws InvalidArgument on a duplicate name.
  ParamIndex add(std::string name, double value, bool remap = true);

  std::size_t size() const { return params_.size(); }
  bool empty() const { return params_.empty(); }

  const Parameter& operator[](std::size_t i) const { return params_.at(i); }
  Parameter& operator[](std::size_t i) { return params_.at(i); }

  double value(ParamIndex i) const { return params_.at(i.value).value; }
  void set(ParamIndex i, double v) { params_.at(i.value).value = v; }

  std::vector<double> values() const;
  void set_values(const std::vector<double>& v);

  std::optional<ParamIndex> find(std::string_view name) const;

  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

 private:
  std::vector<Parameter> params_;
};

/// Ordered gate list over `num_qubits` qubits. Qubit 0 is the most significant
/// bit of a basis-state index (MSb-0).
struct Circuit {
  int num_qubits = 0;
  std::vector<GateInstance> gates;
  ParamStore params;

  explicit Circuit(int w = 0) : num_qubits(w) {}

  Circuit& add(GateKind kind, std::vector<int> qubits);
  Circuit& add(GateKind kind, int qubit, AngleSource angle);
  /// Adds a fresh trainable parameter and a rotation that reads it.
  ParamIndex add_rotation(GateKind kind, int qubit, std::string param_name, double value);
};

struct Violation {
  static constexpr std::size_t kCircuitLevel = static_cast<std::size_t>(-1);
  std::size_t gate_index = kCircuitLevel;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate(const Circuit& circuit);
/// Throws InvalidArgument with the report text when validation fails.
void require_valid(const Circuit& circuit);

/// Hardware-efficient ansatz: per layer RY,RZ on every qubit, then a CNOT chain.
Circuit ansatz_su2(int width, int layers);

/// Per layer RZ,RY,RZ on every qubit, then a CNOT ring with offset `range`.
Circuit ansatz_strongly_entangling(int width, int layers, int range = 1);

/// Numeric angle each gate sees (NaN for non-parametric gates), read directly
/// from the parameter store without remapping.
std::vector<double> gate_angles(const Circuit& circuit, const ParamStore& params);

}  // namespace kronsim
