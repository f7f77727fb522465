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

#include "kronsim/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "kronsim/matrix.hpp"

namespace kronsim {
namespace {

enum class Tok { Ident, Real, Integer, String, Symbol, Arrow, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::string describe(const Token& t) {
  switch (t.type) {
    case Tok::End:
      return "end of input";
    case Tok::String:
      return "string \"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Tok::Ident;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        t.text += advance();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < src_.size() &&
                                                        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      return number(t);
    }
    if (c == '"') {
      advance();
      t.type = Tok::String;
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += advance();
      if (pos_ >= src_.size() || src_[pos_] != '"')
        throw QasmError(QasmError::Kind::Syntax, t.line, t.column, "unterminated string literal");
      advance();
      return t;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      advance();
      advance();
      t.type = Tok::Arrow;
      t.text = "->";
      return t;
    }
    if (std::string_view("()[]{};,*/+-^=<>").find(c) != std::string_view::npos) {
      t.type = Tok::Symbol;
      t.text = std::string(1, advance());
      return t;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "\\x" + hex(c);
    throw QasmError(QasmError::Kind::Syntax, t.line, t.column, "unexpected character '" + shown + "'");
  }

 private:
  static std::string hex(char c) {
    char buf[4];
    std::snprintf(buf, sizeof buf, "%02x", static_cast<unsigned char>(c));
    return buf;
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token number(Token t) {
    bool real = false;
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += advance();
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      real = true;
      t.text += advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t save_pos = pos_, save_line = line_, save_col = col_;
      std::string exp(1, advance());
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) exp += advance();
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        real = true;
        t.text += exp;
        digits();
      } else {
        pos_ = save_pos;
        line_ = save_line;
        col_ = save_col;
      }
    }
    t.type = real ? Tok::Real : Tok::Integer;
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) { cur_ = lex_.next(); }

  Circuit parse() {
    header();
    std::optional<Circuit> circuit;
    std::string reg;
    std::size_t rotations = 0;
    while (cur_.type != Tok::End) {
      if (cur_.type != Tok::Ident) syntax("expected a statement");
      const Token kw = cur_;
      if (kw.text == "include") {
        include();
      } else if (kw.text == "qreg") {
        if (circuit) unsupported(kw, "multiple quantum registers");
        bump();
        reg = expect(Tok::Ident, "register name").text;
        expect_symbol("[");
        const Token size = expect(Tok::Integer, "register size");
        const int w = to_int(size);
        if (w < 1 || w > 30) fail(QasmError::Kind::Semantic, size, "register size must be in [1, 30]");
        expect_symbol("]");
        expect_symbol(";");
        circuit.emplace(w);
      } else if (kw.text == "creg" || kw.text == "measure" || kw.text == "barrier" || kw.text == "reset" ||
                 kw.text == "gate" || kw.text == "opaque" || kw.text == "if" || kw.text == "U" ||
                 kw.text == "CX" || kw.text == "OPENQASM") {
        unsupported(kw, "statement '" + kw.text + "'");
      } else if (const auto kind = gate_from_name(kw.text)) {
        if (!circuit) fail(QasmError::Kind::Semantic, kw, "gate before any qreg declaration");
        gate(*circuit, *kind, reg, rotations);
      } else {
        unsupported(kw, "gate '" + kw.text + "'");
      }
    }
    if (!circuit) fail(QasmError::Kind::Semantic, cur_, "missing qreg declaration");
    return std::move(*circuit);
  }

 private:
  [[noreturn]] void fail(QasmError::Kind kind, const Token& at, const std::string& msg) {
    throw QasmError(kind, at.line, at.column, msg);
  }
  [[noreturn]] void syntax(const std::string& expected) {
    fail(QasmError::Kind::Syntax, cur_, expected + ", found " + describe(cur_));
  }
  [[noreturn]] void unsupported(const Token& at, const std::string& what) {
    fail(QasmError::Kind::Unsupported, at, "unsupported " + what);
  }

  void bump() { cur_ = lex_.next(); }

  Token expect(Tok type, const std::string& what) {
    if (cur_.type != type) syntax("expected " + what);
    Token t = cur_;
    bump();
    return t;
  }

  void expect_symbol(const char* s) {
    if (cur_.type != Tok::Symbol || cur_.text != s) syntax(std::string("expected '") + s + "'");
    bump();
  }

  bool at_symbol(const char* s) const { return cur_.type == Tok::Symbol && cur_.text == s; }

  int to_int(const Token& t) {
    int v = 0;
    const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || p != t.text.data() + t.text.size())
      fail(QasmError::Kind::Semantic, t, "integer out of range");
    return v;
  }

  void header() {
    if (cur_.type != Tok::Ident || cur_.text != "OPENQASM") syntax("expected OPENQASM header");
    bump();
    const Token v = cur_;
    if (v.type != Tok::Real || v.text != "2.0") {
      if (v.type == Tok::Real || v.type == Tok::Integer)
        unsupported(v, "OpenQASM version " + v.text);
      syntax("expected version 2.0");
    }
    bump();
    expect_symbol(";");
  }

  void include() {
    bump();
    const Token file = expect(Tok::String, "include file name");
    if (file.text != "qelib1.inc") unsupported(file, "include \"" + file.text + "\"");
    expect_symbol(";");
  }

  int qubit_arg(const Circuit& c, const std::string& reg) {
    const Token name = expect(Tok::Ident, "qubit argument");
    if (name.text != reg) fail(QasmError::Kind::Semantic, name, "unknown register '" + name.text + "'");
    if (!at_symbol("[")) unsupported(name, "whole-register gate argument");
    bump();
    const Token idx = expect(Tok::Integer, "qubit index");
    const int q = to_int(idx);
    if (q < 0 || q >= c.num_qubits)
      fail(QasmError::Kind::Semantic, idx, "qubit index " + idx.text + " out of range");
    expect_symbol("]");
    return q;
  }

  void gate(Circuit& c, GateKind kind, const std::string& reg, std::size_t& rotations) {
    const Token at = cur_;
    bump();
    std::optional<double> theta;
    if (is_parametric(kind)) {
      expect_symbol("(");
      theta = expression();
      expect_symbol(")");
    } else if (at_symbol("(")) {
      fail(QasmError::Kind::Semantic, cur_, "gate '" + at.text + "' takes no parameters");
    }
    std::vector<int> qubits{qubit_arg(c, reg)};
    for (int k = 1; k < arity(kind); ++k) {
      expect_symbol(",");
      qubits.push_back(qubit_arg(c, reg));
    }
    if (qubits.size() == 2 && qubits[0] == qubits[1])
      fail(QasmError::Kind::Semantic, at, "control equals target");
    expect_symbol(";");
    if (theta) {
      c.add_rotation(kind, qubits[0], "theta_" + std::to_string(rotations++), *theta);
    } else {
      c.add(kind, std::move(qubits));
    }
  }

  // expr := unary (('*' | '/') unary)*
  double expression() {
    double v = unary();
    while (at_symbol("*") || at_symbol("/")) {
      const bool mul = cur_.text == "*";
      bump();
      const double rhs = unary();
      v = mul ? v * rhs : v / rhs;
    }
    if (at_symbol("+") || at_symbol("-") || at_symbol("^"))
      unsupported(cur_, "operator '" + cur_.text + "' in angle expression");
    if (!std::isfinite(v)) fail(QasmError::Kind::Semantic, cur_, "angle expression is not finite");
    return v;
  }

  double unary() {
    if (++depth_ > kMaxDepth) fail(QasmError::Kind::Semantic, cur_, "angle expression nested too deeply");
    double v;
    if (at_symbol("-")) {
      bump();
      v = -unary();
    } else {
      v = primary();
    }
    --depth_;
    return v;
  }

  double primary() {
    if (cur_.type == Tok::Real || cur_.type == Tok::Integer) {
      const Token t = cur_;
      bump();
      double v = 0.0;
      const auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc() || p != t.text.data() + t.text.size())
        fail(QasmError::Kind::Semantic, t, "invalid number '" + t.text + "'");
      return v;
    }
    if (cur_.type == Tok::Ident && cur_.text == "pi") {
      bump();
      return std::numbers::pi;
    }
    if (at_symbol("(")) {
      bump();
      const double v = expression();
      expect_symbol(")");
      return v;
    }
    if (cur_.type == Tok::Ident) unsupported(cur_, "identifier '" + cur_.text + "' in angle expression");
    syntax("expected a number, 'pi', '-' or '('");
  }

  static constexpr int kMaxDepth = 256;

  Lexer lex_;
  Token cur_;
  int depth_ = 0;
};

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

QasmError::QasmError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         (kind == Kind::Syntax ? "syntax error: " : "") + message),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string export_qasm(const Circuit& circuit, const ParamStore& params) {
  require_valid(circuit);
  const auto angles = gate_angles(circuit, params);
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << circuit.num_qubits << "];\n";
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& gate = circuit.gates[g];
    os << gate_name(gate.kind);
    if (is_parametric(gate.kind)) os << '(' << format_angle(angles[g]) << ')';
    for (std::size_t k = 0; k < gate.qubits.size(); ++k) os << (k ? "," : " ") << "q[" << gate.qubits[k] << ']';
    os << ";\n";
  }
  return os.str();
}

std::string export_qasm(const Circuit& circuit) { return export_qasm(circuit, circuit.params); }

Circuit parse_qasm(std::string_view text) { return Parser(text).parse(); }

}  // namespace kronsim
