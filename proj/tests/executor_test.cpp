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

#include <cmath>
#include <numbers>
#include <random>

#include "kronsim/executor.hpp"
#include "support.hpp"

using namespace kronsim;
using std::numbers::pi;

namespace {

const double kHalf = 1.0 / std::sqrt(2.0);

Circuit bell() {
  Circuit c(2);
  c.add(GateKind::H, {0}).add(GateKind::CNOT, {0, 1});
  return c;
}

}  // namespace

TEST_CASE("zero_state") {
  const auto s = zero_state(2, 1);
  CHECK(s.dim() == 4);
  CHECK(s.at(0, 0) == Complex(1.0));
  for (std::size_t i = 1; i < 4; ++i) CHECK(s.at(0, i) == Complex(0.0));
  const auto b3 = zero_state(1, 3);
  CHECK(b3.batch() == 3);
  for (std::size_t b = 0; b < 3; ++b) {
    CHECK(b3.at(b, 0) == Complex(1.0));
    CHECK(b3.at(b, 1) == Complex(0.0));
  }
  CHECK(zero_state(3, 1).norms()[0] == 1.0);
  CHECK_THROWS_AS(zero_state(0, 1), InvalidArgument);
  CHECK_THROWS_AS(zero_state(2, 0), InvalidArgument);
}

TEST_CASE("group_unitary examples") {
  Circuit c(3);
  c.add(GateKind::H, {0});
  const auto h = group_unitary(SubCircuitGroup{{0}, {0}}, c, c.params);
  CHECK(max_abs_diff(h.u, fixed_matrix(GateKind::H)) < 1e-15);

  const auto b = bell();
  const auto gu = group_unitary(SubCircuitGroup{{0, 1}, {0, 1}}, b, b.params);
  const auto out = apply_group(zero_state(2), gu);
  CHECK(std::abs(out.at(0, 0) - kHalf) < 1e-15);
  CHECK(std::abs(out.at(0, 3) - kHalf) < 1e-15);
  CHECK(unitarity_error(gu.u) < 1e-10);

  Circuit rx(3);
  rx.add_rotation(GateKind::RX, 2, "t", 0.7);
  const auto gr = group_unitary(SubCircuitGroup{{1, 2}, {0}}, rx, rx.params);
  CHECK(max_abs_diff(gr.u, kron(Matrix::identity(2), gate_matrix(GateKind::RX, 0.7))) < 1e-15);

  CHECK_THROWS_AS(group_unitary(SubCircuitGroup{{1, 2}, {0}}, rx, rx.params, 4), CacheBudgetExceeded);
}

TEST_CASE("apply_group examples") {
  std::mt19937_64 rng(41);
  const auto s = testing::random_state(4, 2, rng);
  const GroupUnitary id{SubCircuitGroup{{1, 3}, {}}, Matrix::identity(4)};
  CHECK(max_abs_diff(apply_group(s, id), s) == 0.0);

  // CNOT with control local 0 (qubit 0) and target local 1 (qubit 2): |101> -> |100>.
  StateVector basis(3, 1);
  basis.at(0, 0b101) = 1.0;
  const GroupUnitary cnot{SubCircuitGroup{{0, 2}, {}}, fixed_matrix(GateKind::CNOT)};
  const auto out = apply_group(basis, cnot);
  CHECK(out.at(0, 0b100) == Complex(1.0));
  CHECK(out.at(0, 0b101) == Complex(0.0));

  const GroupUnitary far{SubCircuitGroup{{0, 5}, {}}, fixed_matrix(GateKind::CNOT)};
  CHECK_THROWS_AS(apply_group(basis, far), InvalidArgument);
}

TEST_CASE("run examples") {
  const auto b = bell();
  const auto out = run(b, b.params);
  CHECK(std::abs(out.at(0, 0) - kHalf) < 1e-15);
  CHECK(std::abs(out.at(0, 3) - kHalf) < 1e-15);
  CHECK(std::abs(out.at(0, 1)) < 1e-15);

  std::mt19937_64 rng(42);
  const auto s = testing::random_state(3, 2, rng);
  const Circuit empty(3);
  CHECK(run(empty, empty.params, nullptr, &s) == s);

  auto su2 = ansatz_su2(5, 2);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (std::size_t i = 0; i < su2.params.size(); ++i) su2.params[i].value = angle(rng);
  const auto plan = split_circuit(su2, 3);
  const auto whole = run(su2, su2.params);
  const auto split = run(su2, su2.params, &plan);
  CHECK(max_abs_diff(whole, split) < 1e-10);
}

TEST_CASE("execution modes agree with the dense oracle") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    const int w = 1 + i % 6;
    const auto c = testing::random_circuit(w, 25, rng);
    const auto angles = gate_angles(c, c.params);
    const auto input = testing::random_state(w, 3, rng);
    const auto oracle = testing::dense_run(c, angles, input);
    for (auto mode : {ExecMode::Cached, ExecMode::Naive}) {
      const Executor exec(c, {.mode = mode});
      CHECK(max_abs_diff(exec.run(angles, input), oracle) < 1e-12);
    }
    for (int g = 2; g <= 4; ++g) {
      for (bool fuse : {true, false}) {
        const Executor exec(c, {.mode = ExecMode::Split, .max_qubits = g, .fuse_groups = fuse});
        const auto out = exec.run(angles, input);
        CHECK(max_abs_diff(out, oracle) < 1e-10);
        for (double n : out.norms()) CHECK(std::abs(n - 1.0) < 1e-10);
      }
    }
  }
}

TEST_CASE("batched run equals independent runs") {
  std::mt19937_64 rng(44);
  const auto c = testing::random_circuit(5, 30, rng);
  const auto angles = gate_angles(c, c.params);
  const auto input = testing::random_state(5, 16, rng);
  for (auto mode : {ExecMode::Cached, ExecMode::Naive, ExecMode::Split}) {
    const Executor exec(c, {.mode = mode, .max_qubits = 3});
    const auto batched = exec.run(angles, input);
    for (std::size_t b = 0; b < 16; ++b)
      CHECK(max_abs_diff(batched.slice(b, 1), exec.run(angles, input.slice(b, 1))) < 1e-12);
  }
}

TEST_CASE("trace and run_steps reproduce a full run") {
  auto c = ansatz_strongly_entangling(4, 2, 1);
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (std::size_t i = 0; i < c.params.size(); ++i) c.params[i].value = angle(rng);
  const auto angles = gate_angles(c, c.params);
  for (auto mode : {ExecMode::Cached, ExecMode::Split}) {
    const Executor exec(c, {.mode = mode, .max_qubits = 3});
    const auto states = exec.trace(angles, zero_state(4));
    REQUIRE(states.size() == exec.num_steps() + 1);
    CHECK(max_abs_diff(states.back(), exec.run(angles, zero_state(4))) == 0.0);
    const std::size_t mid = exec.num_steps() / 2;
    CHECK(max_abs_diff(exec.run_steps(mid, exec.num_steps(), angles, states[mid]), states.back()) == 0.0);
  }
}

TEST_CASE("executor construction errors") {
  const auto c = ansatz_su2(6, 1);
  CHECK_THROWS_AS(Executor(c, {.mode = ExecMode::Cached, .cache_budget = std::size_t{1} << 12}), CacheBudgetExceeded);
  CHECK_NOTHROW(Executor(c, {.mode = ExecMode::Split, .max_qubits = 3, .cache_budget = std::size_t{1} << 12}));
  Circuit bad(2);
  bad.add(GateKind::CNOT, {0, 0});
  CHECK_THROWS_AS(Executor{bad}, InvalidArgument);
  const Executor exec(c);
  const std::vector<double> too_few(3, 0.0);
  CHECK_THROWS_AS(exec.run(too_few, zero_state(6)), InvalidArgument);
  const auto narrow = zero_state(3);
  CHECK_THROWS_AS(exec.run(c.params, &narrow), InvalidArgument);
}

TEST_CASE("embedding layer modes agree") {
  std::mt19937_64 rng(46);
  std::uniform_real_distribution<double> angle(-pi, pi);
  const std::vector<GateKind> axes{GateKind::RX, GateKind::RY, GateKind::RZ};
  std::vector<double> inputs(4 * 3);
  for (auto& a : inputs) a = angle(rng);
  const auto s = testing::random_state(3, 4, rng);
  const auto ref = EmbeddingLayer(axes, ExecMode::Cached).forward(inputs, s);
  CHECK(max_abs_diff(EmbeddingLayer(axes, ExecMode::Naive).forward(inputs, s), ref) < 1e-12);
  CHECK(max_abs_diff(EmbeddingLayer(axes, ExecMode::Split).forward(inputs, s), ref) < 1e-12);
}

TEST_CASE("measurement") {
  const auto z = expectation_z(zero_state(1), 0);
  CHECK(z[0] == 1.0);

  Circuit h(1);
  h.add(GateKind::H, {0});
  CHECK(std::abs(expectation_z(run(h, h.params), 0)[0]) < 1e-12);

  Circuit rx(1);
  rx.add(GateKind::RX, 0, pi / 3);
  CHECK(std::abs(expectation_z(run(rx, rx.params), 0)[0] - 0.5) < 1e-12);

  const auto b = bell();
  const auto p = probabilities(run(b, b.params))[0];
  CHECK(std::abs(p[0] - 0.5) < 1e-12);
  CHECK(std::abs(p[1]) < 1e-12);
  CHECK(std::abs(p[2]) < 1e-12);
  CHECK(std::abs(p[3] - 0.5) < 1e-12);

  CHECK(probabilities(zero_state(2))[0] == std::vector<double>{1.0, 0.0, 0.0, 0.0});

  Circuit hh(2);
  hh.add(GateKind::H, {0}).add(GateKind::H, {1});
  const auto uniform = probabilities(run(hh, hh.params));
  for (double v : uniform[0]) CHECK(std::abs(v - 0.25) < 1e-12);

  CHECK_THROWS_AS(expectation_z(zero_state(2), 2), InvalidArgument);
}
