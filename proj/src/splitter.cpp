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

#include "kronsim/splitter.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "kronsim/matrix.hpp"

namespace kronsim {
namespace {

bool is_two_qubit(const GateInstance& g) { return arity(g.kind) == 2; }

struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<std::size_t>> DependencyGraph::components() const {
  DisjointSet ds(nodes.size());
  for (const auto& [u, v] : edges) ds.unite(u, v);
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < nodes.size(); ++i) by_root[ds.find(i)].push_back(i);
  // Roots are the smallest member, so map order is first-node order.
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

DependencyGraph build_dependency_graph(const Circuit& circuit) {
  DependencyGraph graph;
  std::vector<std::optional<std::size_t>> last_on_qubit(static_cast<std::size_t>(std::max(circuit.num_qubits, 0)));
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& gate = circuit.gates[g];
    if (!is_two_qubit(gate)) continue;
    const std::size_t node = graph.nodes.size();
    graph.nodes.push_back(g);
    for (int q : gate.qubits) {
      auto& last = last_on_qubit.at(static_cast<std::size_t>(q));
      if (last) edges.emplace(*last, node);
      last = node;
    }
  }
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

int SubCircuitGroup::local_index(int qubit) const {
  const auto it = std::lower_bound(qubits.begin(), qubits.end(), qubit);
  return it != qubits.end() && *it == qubit ? static_cast<int>(it - qubits.begin()) : -1;
}

SplitPlan greedy_split(const DependencyGraph& graph, const Circuit& circuit, int max_qubits) {
  if (max_qubits < 2) throw InvalidArgument("greedy_split: max_qubits must be at least 2");
  SplitPlan plan;
  plan.max_qubits = max_qubits;
  for (const auto& component : graph.components()) {
    std::set<int> qubits;
    std::vector<std::size_t> gates;
    auto flush = [&] {
      if (gates.empty()) return;
      plan.groups.push_back(SubCircuitGroup{{qubits.begin(), qubits.end()}, gates});
      qubits.clear();
      gates.clear();
    };
    for (std::size_t node : component) {
      const std::size_t g = graph.nodes[node];
      std::set<int> merged = qubits;
      merged.insert(circuit.gates[g].qubits.begin(), circuit.gates[g].qubits.end());
      if (static_cast<int>(merged.size()) > max_qubits) {
        flush();
        merged = {circuit.gates[g].qubits.begin(), circuit.gates[g].qubits.end()};
      }
      qubits = std::move(merged);
      gates.push_back(g);
    }
    flush();
  }
  std::stable_sort(plan.groups.begin(), plan.groups.end(),
                   [](const auto& a, const auto& b) { return a.gates.front() < b.gates.front(); });
  return plan;
}

SplitPlan attach_single_qubit_gates(SplitPlan plan, const Circuit& circuit) {
  // For every qubit: (gate index, group) of each two-qubit gate touching it, in circuit order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> anchors(
      static_cast<std::size_t>(circuit.num_qubits));
  for (std::size_t gi = 0; gi < plan.groups.size(); ++gi)
    for (std::size_t g : plan.groups[gi].gates)
      for (int q : circuit.gates[g].qubits) anchors.at(static_cast<std::size_t>(q)).emplace_back(g, gi);
  for (auto& a : anchors) std::sort(a.begin(), a.end());

  // Singleton groups keyed by qubit, positioned by their first gate.
  std::map<int, SubCircuitGroup> singletons;
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& gate = circuit.gates[g];
    if (is_two_qubit(gate)) continue;
    const int q = gate.qubits.at(0);
    const auto& cands = anchors.at(static_cast<std::size_t>(q));
    if (cands.empty()) {
      auto& s = singletons[q];
      s.qubits = {q};
      s.gates.push_back(g);
      continue;
    }
    // Nearest anchor: first anchor after g vs last anchor before g; ties prefer before.
    const auto after = std::lower_bound(cands.begin(), cands.end(), std::make_pair(g, std::size_t{0}));
    std::size_t group;
    if (after == cands.begin()) {
      group = after->second;
    } else if (after == cands.end()) {
      group = std::prev(after)->second;
    } else {
      const auto before = std::prev(after);
      group = (g - before->first <= after->first - g) ? before->second : after->second;
    }
    plan.groups[group].gates.push_back(g);
  }
  for (auto& grp : plan.groups) std::sort(grp.gates.begin(), grp.gates.end());

  // Anchored groups keep their order (the order of their first two-qubit gate);
  // singletons slot in by their first gate index.
  std::vector<std::pair<std::size_t, SubCircuitGroup>> keyed;
  for (auto& grp : plan.groups) {
    std::size_t key = std::numeric_limits<std::size_t>::max();
    for (std::size_t g : grp.gates)
      if (is_two_qubit(circuit.gates[g])) key = std::min(key, g);
    keyed.emplace_back(key, std::move(grp));
  }
  for (auto& [q, s] : singletons) keyed.emplace_back(s.gates.front(), std::move(s));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  plan.groups.clear();
  for (auto& [key, grp] : keyed) plan.groups.push_back(std::move(grp));
  return plan;
}

SplitPlan split_circuit(const Circuit& circuit, int max_qubits) {
  return attach_single_qubit_gates(
      greedy_split(build_dependency_graph(circuit), circuit, max_qubits), circuit);
}

std::string PlanReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) os << (i ? "; " : "") << violations[i];
  return os.str();
}

PlanReport validate_plan(const SplitPlan& plan, const Circuit& circuit, int max_qubits) {
  PlanReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const std::size_t n = circuit.gates.size();
  std::vector<int> seen(n, 0);

  std::vector<std::vector<std::size_t>> per_qubit(static_cast<std::size_t>(std::max(circuit.num_qubits, 0)));
  for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
    const auto& grp = plan.groups[gi];
    const std::string where = "group " + std::to_string(gi);
    if (grp.qubits.empty()) fail(where + " has no qubits");
    if (!std::is_sorted(grp.qubits.begin(), grp.qubits.end()) ||
        std::adjacent_find(grp.qubits.begin(), grp.qubits.end()) != grp.qubits.end())
      fail(where + " qubits are not strictly ascending");
    if (grp.width() > max_qubits && grp.width() > 1)
      fail(where + " width " + std::to_string(grp.width()) + " exceeds " + std::to_string(max_qubits));
    for (std::size_t g : grp.gates) {
      if (g >= n) {
        fail(where + " references gate " + std::to_string(g) + " outside the circuit");
        continue;
      }
      ++seen[g];
      for (int q : circuit.gates[g].qubits) {
        if (grp.local_index(q) < 0)
          fail(where + " gate " + std::to_string(g) + " touches qubit " + std::to_string(q) +
               " outside the group");
        if (q >= 0 && q < circuit.num_qubits) per_qubit[static_cast<std::size_t>(q)].push_back(g);
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    if (seen[g] == 0) fail("gate " + std::to_string(g) + " is not covered");
    if (seen[g] > 1) fail("gate " + std::to_string(g) + " assigned " + std::to_string(seen[g]) + " times");
  }
  for (std::size_t q = 0; q < per_qubit.size(); ++q)
    if (!std::is_sorted(per_qubit[q].begin(), per_qubit[q].end()))
      fail("order violation on qubit " + std::to_string(q));
  return report;
}

}  // namespace kronsim
