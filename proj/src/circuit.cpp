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

#include "kronsim/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "kronsim/matrix.hpp"

namespace kronsim {
namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 9> kNames{{
    {GateKind::RX, "rx"},
    {GateKind::RY, "ry"},
    {GateKind::RZ, "rz"},
    {GateKind::H, "h"},
    {GateKind::X, "x"},
    {GateKind::Y, "y"},
    {GateKind::Z, "z"},
    {GateKind::CNOT, "cx"},
    {GateKind::CZ, "cz"},
}};

}  // namespace

bool is_parametric(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

int arity(GateKind kind) { return kind == GateKind::CNOT || kind == GateKind::CZ ? 2 : 1; }

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, n] : kNames)
    if (k == kind) return n;
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

ParamIndex ParamStore::add(std::string name, double value, bool remap) {
  if (find(name)) throw InvalidArgument("ParamStore: duplicate parameter name '" + name + "'");
  params_.push_back(Parameter{std::move(name), value, remap, false});
  return ParamIndex{params_.size() - 1};
}

std::vector<double> ParamStore::values() const {
  std::vector<double> out;
  out.reserve(params_.size());
  for (const auto& p : params_) out.push_back(p.value);
  return out;
}

void ParamStore::set_values(const std::vector<double>& v) {
  if (v.size() != params_.size()) throw InvalidArgument("ParamStore: value count mismatch");
  for (std::size_t i = 0; i < v.size(); ++i) params_[i].value = v[i];
}

std::optional<ParamIndex> ParamStore::find(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i].name == name) return ParamIndex{i};
  return std::nullopt;
}

Circuit& Circuit::add(GateKind kind, std::vector<int> qubits) {
  gates.push_back(GateInstance{kind, std::move(qubits), std::nullopt});
  return *this;
}

Circuit& Circuit::add(GateKind kind, int qubit, AngleSource angle) {
  gates.push_back(GateInstance{kind, {qubit}, angle});
  return *this;
}

ParamIndex Circuit::add_rotation(GateKind kind, int qubit, std::string param_name, double value) {
  const ParamIndex p = params.add(std::move(param_name), value);
  add(kind, qubit, p);
  return p;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << "; ";
    os << v.message;
    if (v.gate_index != Violation::kCircuitLevel) os << " at gate " << v.gate_index;
  }
  return os.str();
}

ValidationReport validate(const Circuit& c) {
  ValidationReport report;
  auto fail = [&](std::size_t gate, std::string msg) {
    report.violations.push_back(Violation{gate, std::move(msg)});
  };
  if (c.num_qubits < 1) fail(Violation::kCircuitLevel, "qubit count must be at least 1");

  std::vector<bool> referenced(c.params.size(), false);
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const auto& gate = c.gates[g];
    const auto want = static_cast<std::size_t>(arity(gate.kind));
    if (gate.qubits.size() != want) {
      fail(g, std::string(gate_name(gate.kind)) + " expects " + std::to_string(want) + " qubit(s)");
      continue;
    }
    for (int q : gate.qubits)
      if (q < 0 || q >= c.num_qubits) fail(g, "qubit index out of range");
    if (want == 2 && gate.qubits[0] == gate.qubits[1]) fail(g, "control equals target");

    if (is_parametric(gate.kind)) {
      if (!gate.angle) {
        fail(g, "parametric gate without an angle");
      } else if (const auto* p = std::get_if<ParamIndex>(&*gate.angle)) {
        if (p->value >= c.params.size())
          fail(g, "parameter reference out of range");
        else
          referenced[p->value] = true;
      } else if (!std::isfinite(std::get<double>(*gate.angle))) {
        fail(g, "non-finite fixed angle");
      }
    } else if (gate.angle) {
      fail(g, "non-parametric gate carries an angle");
    }
  }

  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < c.params.size(); ++i) {
    const auto& p = c.params[i];
    if (!names.insert(p.name).second) fail(Violation::kCircuitLevel, "duplicate parameter name '" + p.name + "'");
    if (!referenced[i] && !p.unused)
      fail(Violation::kCircuitLevel, "parameter '" + p.name + "' is never referenced");
  }
  return report;
}

void require_valid(const Circuit& circuit) {
  const auto report = validate(circuit);
  if (!report.ok()) throw InvalidArgument("invalid circuit: " + report.to_string());
}

Circuit ansatz_su2(int width, int layers) {
  if (width < 2) throw InvalidArgument("ansatz_su2: need at least 2 qubits");
  if (layers < 1) throw InvalidArgument("ansatz_su2: need at least 1 layer");
  Circuit c(width);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < width; ++q) {
      const std::string tag = std::to_string(l) + "_" + std::to_string(q);
      c.add_rotation(GateKind::RY, q, "ry_" + tag, 0.0);
      c.add_rotation(GateKind::RZ, q, "rz_" + tag, 0.0);
    }
    for (int q = 0; q + 1 < width; ++q) c.add(GateKind::CNOT, {q, q + 1});
  }
  return c;
}

Circuit ansatz_strongly_entangling(int width, int layers, int range) {
  if (width < 2) throw InvalidArgument("ansatz_strongly_entangling: need at least 2 qubits");
  if (layers < 1) throw InvalidArgument("ansatz_strongly_entangling: need at least 1 layer");
  if (range < 1 || range >= width)
    throw InvalidArgument("ansatz_strongly_entangling: range must satisfy 1 <= r < W");
  Circuit c(width);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < width; ++q) {
      const std::string tag = std::to_string(l) + "_" + std::to_string(q);
      c.add_rotation(GateKind::RZ, q, "rz0_" + tag, 0.0);
      c.add_rotation(GateKind::RY, q, "ry_" + tag, 0.0);
      c.add_rotation(GateKind::RZ, q, "rz1_" + tag, 0.0);
    }
    for (int q = 0; q < width; ++q) c.add(GateKind::CNOT, {q, (q + range) % width});
  }
  return c;
}

std::vector<double> gate_angles(const Circuit& circuit, const ParamStore& params) {
  std::vector<double> out(circuit.gates.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& gate = circuit.gates[g];
    if (!gate.angle) continue;
    if (const auto* p = std::get_if<ParamIndex>(&*gate.angle))
      out[g] = params.value(*p);
    else
      out[g] = std::get<double>(*gate.angle);
  }
  return out;
}

}  // namespace kronsim
