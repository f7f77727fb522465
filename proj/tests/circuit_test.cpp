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

#include <doctest.h>

#include "kronsim/circuit.hpp"
#include "kronsim/matrix.hpp"

using namespace kronsim;

namespace {

std::size_t count_kind(const Circuit& c, GateKind k) {
  std::size_t n = 0;
  for (const auto& g : c.gates) n += g.kind == k;
  return n;
}

}  // namespace

TEST_CASE("validate accepts the Bell-pair circuit") {
  Circuit c(2);
  c.add(GateKind::H, {0}).add(GateKind::CNOT, {0, 1});
  CHECK(validate(c).ok());
}

TEST_CASE("validate reports control equal to target with the gate index") {
  Circuit c(2);
  c.add(GateKind::CNOT, {1, 1});
  const auto report = validate(c);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].gate_index == 0);
  CHECK(report.to_string() == "control equals target at gate 0");
}

TEST_CASE("validate reports out-of-range qubits") {
  Circuit c(3);
  c.add(GateKind::RX, 5, 0.1);
  const auto report = validate(c);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].message == "qubit index out of range");
}

TEST_CASE("validate checks arity, angles and parameters") {
  SUBCASE("zero width") { CHECK_FALSE(validate(Circuit(0)).ok()); }
  SUBCASE("rotation without angle") {
    Circuit c(1);
    c.add(GateKind::RY, {0});
    CHECK_FALSE(validate(c).ok());
  }
  SUBCASE("fixed gate with angle") {
    Circuit c(1);
    c.add(GateKind::H, 0, 0.5);
    CHECK_FALSE(validate(c).ok());
  }
  SUBCASE("two-qubit gate with one qubit") {
    Circuit c(2);
    c.add(GateKind::CZ, {0});
    CHECK_FALSE(validate(c).ok());
  }
  SUBCASE("dangling parameter unless flagged unused") {
    Circuit c(1);
    c.params.add("orphan", 0.0);
    CHECK_FALSE(validate(c).ok());
    c.params[0].unused = true;
    CHECK(validate(c).ok());
  }
  SUBCASE("parameter reference out of range") {
    Circuit c(1);
    c.add(GateKind::RZ, 0, ParamIndex{3});
    CHECK_FALSE(validate(c).ok());
  }
  SUBCASE("duplicate names are refused at insertion") {
    ParamStore p;
    p.add("a", 0.0);
    CHECK_THROWS_AS(p.add("a", 1.0), InvalidArgument);
  }
}

TEST_CASE("ansatz_su2 follows the RY/RZ + CNOT-chain layout") {
  const auto c = ansatz_su2(2, 1);
  REQUIRE(c.gates.size() == 5);
  CHECK(c.gates[0].kind == GateKind::RY);
  CHECK(c.gates[0].qubits == std::vector<int>{0});
  CHECK(c.gates[1].kind == GateKind::RZ);
  CHECK(c.gates[2].kind == GateKind::RY);
  CHECK(c.gates[2].qubits == std::vector<int>{1});
  CHECK(c.gates[3].kind == GateKind::RZ);
  CHECK(c.gates[4].kind == GateKind::CNOT);
  CHECK(c.gates[4].qubits == std::vector<int>{0, 1});
  CHECK(c.params.size() == 4);

  const auto c32 = ansatz_su2(3, 2);
  CHECK(c32.params.size() == 12);
  CHECK(count_kind(c32, GateKind::CNOT) == 4);
  CHECK_THROWS_AS(ansatz_su2(1, 1), InvalidArgument);
  CHECK_THROWS_AS(ansatz_su2(3, 0), InvalidArgument);
}

TEST_CASE("ansatz_strongly_entangling builds a ZYZ layer and a CNOT ring") {
  const auto c = ansatz_strongly_entangling(3, 1, 1);
  CHECK(c.params.size() == 9);
  std::vector<std::vector<int>> cnots;
  for (const auto& g : c.gates)
    if (g.kind == GateKind::CNOT) cnots.push_back(g.qubits);
  CHECK(cnots == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(c.gates[0].kind == GateKind::RZ);
  CHECK(c.gates[1].kind == GateKind::RY);
  CHECK(c.gates[2].kind == GateKind::RZ);

  CHECK(ansatz_strongly_entangling(5, 1, 1).params.size() == 15);

  const auto ring2 = ansatz_strongly_entangling(2, 1, 1);
  cnots.clear();
  for (const auto& g : ring2.gates)
    if (g.kind == GateKind::CNOT) cnots.push_back(g.qubits);
  CHECK(cnots == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  CHECK_THROWS_AS(ansatz_strongly_entangling(3, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(ansatz_strongly_entangling(3, 1, 0), InvalidArgument);
}

TEST_CASE("ansatz gallery validates with closed-form parameter counts") {
  for (int w = 2; w <= 10; ++w)
    for (int l = 1; l <= 4; ++l) {
      const auto su2 = ansatz_su2(w, l);
      CHECK(validate(su2).ok());
      CHECK(su2.params.size() == static_cast<std::size_t>(2 * w * l));
      CHECK(count_kind(su2, GateKind::CNOT) == static_cast<std::size_t>((w - 1) * l));
      for (int r = 1; r < w; ++r) {
        const auto sel = ansatz_strongly_entangling(w, l, r);
        CHECK(validate(sel).ok());
        CHECK(sel.params.size() == static_cast<std::size_t>(3 * w * l));
        CHECK(count_kind(sel, GateKind::CNOT) == static_cast<std::size_t>(w * l));
      }
    }
}

TEST_CASE("gate names round-trip") {
  for (auto k : {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::H, GateKind::X, GateKind::Y, GateKind::Z,
                 GateKind::CNOT, GateKind::CZ})
    CHECK(gate_from_name(gate_name(k)) == k);
  CHECK_FALSE(gate_from_name("ccx"));
}
