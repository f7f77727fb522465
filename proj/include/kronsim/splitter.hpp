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
#include <string>
#include <utility>
#include <vector>

#include "kronsim/circuit.hpp"

namespace kronsim {

/// Nodes are the circuit's two-qubit gates in circuit order; edges link a gate
/// to the next two-qubit gate on each of its qubits.
struct DependencyGraph {
  std::vector<std::size_t> nodes;                             // gate indices
  std::vector<std::pair<std::size_t, std::size_t>> edges;     // node positions, u < v

  /// Connected components as lists of node positions, ordered by first node.
  std::vector<std::vector<std::size_t>> components() const;
};

DependencyGraph build_dependency_graph(const Circuit& circuit);

struct SubCircuitGroup {
  std::vector<int> qubits;         // ascending; local qubit j is qubits[j]
  std::vector<std::size_t> gates;  // circuit indices in execution order

  int width() const { return static_cast<int>(qubits.size()); }
  /// Position of a global qubit in `qubits`, or -1.
  int local_index(int qubit) const;

  friend bool operator==(const SubCircuitGroup&, const SubCircuitGroup&) = default;
};

struct SplitPlan {
  int max_qubits = 0;
  std::vector<SubCircuitGroup> groups;

  friend bool operator==(const SplitPlan&, const SplitPlan&) = default;
};

/// Greedy grouping of the two-qubit gates: each component is walked in circuit
/// order and a new group starts whenever the next gate would push the group
/// past `max_qubits` qubits. Throws InvalidArgument when max_qubits < 2.
SplitPlan greedy_split(const DependencyGraph& graph, const Circuit& circuit, int max_qubits);

/// Places every single-qubit gate into the group holding the closest two-qubit
/// gate on the same qubit (ties go to the earlier gate). Qubits without any
/// two-qubit gate get their own width-1 group.
SplitPlan attach_single_qubit_gates(SplitPlan plan, const Circuit& circuit);

/// build_dependency_graph + greedy_split + attach_single_qubit_gates.
SplitPlan split_circuit(const Circuit& circuit, int max_qubits);

struct PlanReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks coverage, exactly-once assignment, per-qubit order, qubit
/// containment and group width ≤ max_qubits.
PlanReport validate_plan(const SplitPlan& plan, const Circuit& circuit, int max_qubits);

}  // namespace kronsim
