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
#include <string>

#include "kronsim/bench.hpp"
#include "kronsim/qasm.hpp"
#include "support.hpp"

using namespace kronsim;
using std::numbers::pi;

namespace {

const std::string kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

QasmError::Kind error_kind(const std::string& text) {
  try {
    parse_qasm(text);
  } catch (const QasmError& e) {
    return e.kind();
  }
  FAIL("expected a QasmError");
  return QasmError::Kind::Syntax;
}

std::string error_text(const std::string& text) {
  try {
    parse_qasm(text);
  } catch (const QasmError& e) {
    return e.what();
  }
  return {};
}

std::vector<Circuit> gallery() {
  std::vector<Circuit> out;
  std::uint64_t seed = 60;
  for (int w = 2; w <= 6; ++w)
    for (int l = 1; l <= 2; ++l) {
      for (auto kind : {AnsatzKind::SU2, AnsatzKind::StronglyEntangling}) {
        auto c = build_ansatz({kind, w, l, 1});
        randomize_params(c.params, seed++);
        out.push_back(std::move(c));
      }
    }
  return out;
}

}  // namespace

TEST_CASE("export examples") {
  Circuit bell(2);
  bell.add(GateKind::H, {0}).add(GateKind::CNOT, {0, 1});
  CHECK(export_qasm(bell) == kHeader + "qreg q[2];\nh q[0];\ncx q[0],q[1];\n");

  Circuit rx(3);
  rx.add_rotation(GateKind::RX, 1, "t", pi / 2);
  CHECK(export_qasm(rx).find("rx(1.5707963267948966) q[1];\n") != std::string::npos);

  CHECK(export_qasm(Circuit(2)) == kHeader + "qreg q[2];\n");

  Circuit all(2);
  all.add(GateKind::RY, 0, -0.25).add(GateKind::RZ, 1, 3.0);
  all.add(GateKind::X, {0}).add(GateKind::Y, {1}).add(GateKind::Z, {0}).add(GateKind::CZ, {1, 0});
  CHECK(export_qasm(all) == kHeader +
                                "qreg q[2];\nry(-0.25) q[0];\nrz(3) q[1];\nx q[0];\ny q[1];\nz q[0];\ncz q[1],q[0];\n");
}

TEST_CASE("parse examples") {
  const auto c = parse_qasm(kHeader + "qreg q[1];\nrx(pi/2) q[0];\n");
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].kind == GateKind::RX);
  CHECK(gate_angles(c, c.params)[0] == pi / 2);

  const auto e = parse_qasm(kHeader + "qreg q[2];\nrz(-2*pi/3) q[1];\nry(-(0.5)) q[0];\nrx(1e-3) q[0];\n");
  const auto angles = gate_angles(e, e.params);
  CHECK(angles[0] == -2 * pi / 3);
  CHECK(angles[1] == -0.5);
  CHECK(angles[2] == 1e-3);

  // q[0] is the most significant bit.
  const auto x = parse_qasm(kHeader + "qreg q[2];\nx q[0];\n");
  CHECK(run(x, x.params).at(0, 0b10) == Complex(1.0));

  const auto spaced =
      parse_qasm("// leading comment\r\nOPENQASM   2.0 ;\r\ninclude \"qelib1.inc\";\r\n  qreg q [ 2 ] ;\r\n"
                 "h q[0]; // trailing\r\ncx q[0] , q[1];\r\n");
  CHECK(spaced.gates.size() == 2);
  CHECK(spaced.gates[1].qubits == std::vector<int>{0, 1});
}

TEST_CASE("parse diagnostics") {
  CHECK(error_kind(kHeader + "qreg q[2];\ncreg c[2];\nmeasure q -> c;\n") == QasmError::Kind::Unsupported);
  CHECK(error_kind(kHeader + "qreg q[2];\nbarrier q[0];\n") == QasmError::Kind::Unsupported);
  CHECK(error_kind(kHeader + "qreg q[2];\ngate foo a { h a; }\n") == QasmError::Kind::Unsupported);
  CHECK(error_kind(kHeader + "qreg q[2];\nqreg r[2];\n") == QasmError::Kind::Unsupported);
  CHECK(error_kind(kHeader + "qreg q[2];\nh q;\n") == QasmError::Kind::Unsupported);
  CHECK(error_kind(kHeader + "qreg q[2];\nswap q[0],q[1];\n") == QasmError::Kind::Unsupported);
  CHECK(error_kind(kHeader + "qreg q[2];\nh q[2];\n") == QasmError::Kind::Semantic);
  CHECK(error_kind(kHeader + "qreg q[2];\ncx q[1],q[1];\n") == QasmError::Kind::Semantic);
  CHECK(error_kind(kHeader + "qreg q[2];\nh r[0];\n") == QasmError::Kind::Semantic);
  CHECK(error_kind(kHeader + "qreg q[2];\nh q[0]\n") == QasmError::Kind::Syntax);
  CHECK(error_kind(kHeader + "qreg q[2];\nrx(1/0) q[0];\n") == QasmError::Kind::Semantic);
  CHECK_THROWS_AS(parse_qasm("OPENQASM 3.0;\nqreg q[1];\n"), QasmError);

  CHECK(error_text("").find("expected OPENQASM header") != std::string::npos);
  const auto msg = error_text(kHeader + "qreg q[2];\nmeasure q[0] -> c[0];\n");
  CHECK(msg.find("measure") != std::string::npos);
  CHECK(msg.rfind("4:1:", 0) == 0);

  std::string deep = kHeader + "qreg q[1];\nrx(";
  for (int i = 0; i < 2000; ++i) deep += '(';
  CHECK(error_kind(deep) == QasmError::Kind::Semantic);
}

TEST_CASE("round trip over the ansatz gallery") {
  for (const auto& c : gallery()) {
    const auto back = parse_qasm(export_qasm(c));
    CHECK(back.num_qubits == c.num_qubits);
    REQUIRE(back.gates.size() == c.gates.size());
    const auto a = gate_angles(c, c.params);
    const auto b = gate_angles(back, back.params);
    for (std::size_t g = 0; g < c.gates.size(); ++g) {
      CHECK(back.gates[g].kind == c.gates[g].kind);
      CHECK(back.gates[g].qubits == c.gates[g].qubits);
      if (is_parametric(c.gates[g].kind)) CHECK(a[g] == b[g]);
    }
    CHECK(max_abs_diff(testing::dense_unitary(c, a), testing::dense_unitary(back, b)) < 1e-10);
    CHECK(export_qasm(back) == export_qasm(c));
  }
}

TEST_CASE("random circuits round trip") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    const auto c = testing::random_circuit(1 + i % 5, 20, rng);
    const auto back = parse_qasm(export_qasm(c));
    CHECK(export_qasm(back) == export_qasm(c));
  }
}

TEST_CASE("parser totality") {
  std::mt19937_64 rng(62);
  const std::string valid = export_qasm(gallery()[5]);
  const std::string alphabet = "qreg[]();,->0123456789.pi*/+- \n\r\t\"hcxOPENQASM";
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    switch (i % 3) {
      case 0: {
        const std::size_t n = static_cast<std::size_t>(byte(rng));
        for (std::size_t k = 0; k < n; ++k) text += static_cast<char>(byte(rng));
        break;
      }
      case 1: {
        text = valid;
        for (int k = 0; k < 4; ++k) text[static_cast<std::size_t>(rng() % text.size())] = static_cast<char>(byte(rng));
        break;
      }
      default: {
        text = valid.substr(0, rng() % valid.size());
        for (int k = 0; k < 10; ++k) text += alphabet[rng() % alphabet.size()];
        break;
      }
    }
    try {
      const auto c = parse_qasm(text);
      CHECK(validate(c).ok());
    } catch (const QasmError&) {
    }
  }
}
