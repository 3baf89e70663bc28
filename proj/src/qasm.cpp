// Copyright 2026 The qmprog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmp/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "qmp/error.hpp"

namespace qmp {
namespace {

enum class Tok { Ident, Number, String, Symbol, Arrow, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) advance(1);
      t.type = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.')) advance(1);
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        advance(1);
        if (i < src.size() && (src[i] == '+' || src[i] == '-')) advance(1);
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
      }
      t.type = Tok::Number;
    } else if (c == '"') {
      advance(1);
      while (i < src.size() && src[i] != '"') advance(1);
      if (i >= src.size()) throw ParseError(t.line, t.column, "unterminated string");
      advance(1);
      t.type = Tok::String;
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      advance(2);
      t.type = Tok::Arrow;
    } else if (std::string_view("[](),;+-*/").find(c) != std::string_view::npos) {
      advance(1);
      t.type = Tok::Symbol;
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(src.substr(start, i - start));
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

struct Register {
  std::string name;
  int size = 0;
};

struct Operand {
  bool whole_register = false;
  int index = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  QuantumCircuit run(std::string name) {
    while (peek().type != Tok::End) statement();
    if (!qreg_) throw ParseError(peek().line, peek().column, "missing qreg declaration");
    QuantumCircuit c(qreg_->size, creg_ ? creg_->size : 0, std::move(name));
    c.gates = std::move(gates_);
    return c;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(t.line, t.column, what + (t.type == Tok::End ? " at end of input" : " near '" + t.text + "'"));
  }

  bool accept_symbol(char s) {
    if (peek().type == Tok::Symbol && peek().text[0] == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_symbol(char s) {
    if (!accept_symbol(s)) fail(peek(), std::string("expected '") + s + "'");
  }

  const Token& expect(Tok type, const char* what) {
    if (peek().type != type) fail(peek(), std::string("expected ") + what);
    return next();
  }

  int parse_int() {
    const Token& t = expect(Tok::Number, "integer");
    int value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || p != t.text.data() + t.text.size() || value < 0) fail(t, "expected integer");
    return value;
  }

  // expr := term (('+'|'-') term)*, term := unary (('*'|'/') unary)*,
  // unary := '-' unary | primary, primary := number | pi | '(' expr ')'
  double expr() {
    double v = term();
    for (;;) {
      if (accept_symbol('+')) {
        v += term();
      } else if (accept_symbol('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  double term() {
    double v = unary();
    for (;;) {
      if (accept_symbol('*')) {
        v *= unary();
      } else if (accept_symbol('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }
  double unary() {
    if (accept_symbol('-')) return -unary();
    if (accept_symbol('+')) return unary();
    return primary();
  }
  double primary() {
    const Token& t = peek();
    if (t.type == Tok::Number) {
      ++pos_;
      double v = 0.0;
      auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc() || p != t.text.data() + t.text.size()) fail(t, "malformed number");
      return v;
    }
    if (t.type == Tok::Ident && t.text == "pi") {
      ++pos_;
      return std::numbers::pi;
    }
    if (accept_symbol('(')) {
      double v = expr();
      expect_symbol(')');
      return v;
    }
    fail(t, "expected expression");
  }

  Operand operand(const std::optional<Register>& reg, const char* kind) {
    const Token& t = expect(Tok::Ident, kind);
    if (!reg || t.text != reg->name) fail(t, std::string("undeclared ") + kind + " register '" + t.text + "'");
    Operand op;
    if (accept_symbol('[')) {
      const Token& idx_tok = peek();
      op.index = parse_int();
      if (op.index >= reg->size) {
        throw ParseError(idx_tok.line, idx_tok.column,
                         "index " + std::to_string(op.index) + " out of bounds for register '" + reg->name +
                             "' of size " + std::to_string(reg->size));
      }
      expect_symbol(']');
    } else {
      op.whole_register = true;
    }
    return op;
  }

  void declare(std::optional<Register>& slot, const Token& kw) {
    if (slot) fail(kw, "only one " + kw.text + " declaration is supported");
    Register r;
    r.name = expect(Tok::Ident, "register name").text;
    expect_symbol('[');
    r.size = parse_int();
    expect_symbol(']');
    expect_symbol(';');
    slot = r;
  }

  void statement() {
    const Token kw = expect(Tok::Ident, "statement");
    if (kw.text == "OPENQASM") {
      expect(Tok::Number, "version");
      expect_symbol(';');
      return;
    }
    if (kw.text == "include") {
      expect(Tok::String, "file name");
      expect_symbol(';');
      return;
    }
    if (kw.text == "qreg") return declare(qreg_, kw);
    if (kw.text == "creg") return declare(creg_, kw);
    if (!qreg_) fail(kw, "gate before qreg declaration");
    if (kw.text == "measure") return measure();
    if (kw.text == "barrier") return barrier();
    gate(kw);
  }

  void measure() {
    const Operand q = operand(qreg_, "quantum");
    expect(Tok::Arrow, "'->'");
    const Token& ctok = peek();
    const Operand c = operand(creg_, "classical");
    expect_symbol(';');
    if (q.whole_register != c.whole_register) fail(ctok, "mixed broadcast and indexed measure");
    if (q.whole_register) {
      if (qreg_->size != creg_->size) fail(ctok, "register sizes differ in broadcast measure");
      for (int i = 0; i < qreg_->size; ++i) gates_.push_back(Gate::measure(i, i));
    } else {
      gates_.push_back(Gate::measure(q.index, c.index));
    }
  }

  void barrier() {
    std::vector<int> qubits;
    do {
      const Operand op = operand(qreg_, "quantum");
      if (op.whole_register) {
        for (int i = 0; i < qreg_->size; ++i) qubits.push_back(i);
      } else {
        qubits.push_back(op.index);
      }
    } while (accept_symbol(','));
    expect_symbol(';');
    gates_.push_back(Gate::barrier(std::move(qubits)));
  }

  void gate(const Token& kw) {
    static const std::vector<std::pair<std::string_view, GateKind>> kTable = {
        {"x", GateKind::X},     {"sx", GateKind::SX},   {"h", GateKind::H},     {"rz", GateKind::Rz},
        {"rx", GateKind::Rx},   {"u1q", GateKind::U1q}, {"cx", GateKind::CX},   {"zz", GateKind::ZZ},
        {"ccx", GateKind::CCX}, {"swap", GateKind::SWAP},
    };
    std::optional<GateKind> kind;
    for (const auto& [name, k] : kTable) {
      if (kw.text == name) kind = k;
    }
    if (!kind) throw UnsupportedGateError(kw.line, kw.column, kw.text);

    const std::size_t n_params = *kind == GateKind::U1q ? 2
                                 : (*kind == GateKind::Rz || *kind == GateKind::Rx || *kind == GateKind::ZZ) ? 1
                                                                                                            : 0;
    std::vector<double> params;
    if (accept_symbol('(')) {
      if (!accept_symbol(')')) {
        do params.push_back(expr());
        while (accept_symbol(','));
        expect_symbol(')');
      }
    }
    if (params.size() != n_params) {
      fail(kw, "gate '" + kw.text + "' takes " + std::to_string(n_params) + " parameter(s), got " +
                   std::to_string(params.size()));
    }
    std::vector<Operand> ops;
    do ops.push_back(operand(qreg_, "quantum"));
    while (accept_symbol(','));
    expect_symbol(';');

    const std::size_t arity = gate_arity(*kind);
    if (ops.size() != arity) {
      fail(kw, "gate '" + kw.text + "' expects " + std::to_string(arity) + " operand(s)");
    }
    Gate g;
    g.kind = *kind;
    if (n_params > 0) g.theta = params[0];
    if (n_params > 1) g.phi = params[1];
    if (arity == 1 && ops[0].whole_register) {
      for (int i = 0; i < qreg_->size; ++i) {
        g.qubits = {i};
        gates_.push_back(g);
      }
      return;
    }
    for (const Operand& op : ops) {
      if (op.whole_register) fail(kw, "register broadcast is only supported for one-qubit gates");
      g.qubits.push_back(op.index);
    }
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b) {
        if (g.qubits[a] == g.qubits[b]) fail(kw, "repeated qubit operand");
      }
    }
    gates_.push_back(std::move(g));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<Register> qreg_;
  std::optional<Register> creg_;
  std::vector<Gate> gates_;
};

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

QuantumCircuit parse_qasm(std::string_view text, std::string name) {
  Parser parser(tokenize(text));
  QuantumCircuit c = parser.run(std::move(name));
  c.validate();
  return c;
}

std::string emit_qasm(const QuantumCircuit& circuit) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << circuit.n_qubits << "];\n";
  if (circuit.n_cbits > 0) os << "creg c[" << circuit.n_cbits << "];\n";
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::Measure) {
      os << "measure q[" << g.qubits[0] << "] -> c[" << g.cbit << "];\n";
      continue;
    }
    os << gate_name(g.kind);
    if (g.kind == GateKind::Rz || g.kind == GateKind::Rx || g.kind == GateKind::ZZ) {
      os << '(' << format_angle(g.theta) << ')';
    } else if (g.kind == GateKind::U1q) {
      os << '(' << format_angle(g.theta) << ',' << format_angle(g.phi) << ')';
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) os << (i == 0 ? " " : ",") << "q[" << g.qubits[i] << ']';
    os << ";\n";
  }
  return os.str();
}

QuantumCircuit load_qasm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("file", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_qasm(buf.str(), std::filesystem::path(path).stem().string());
}

}  // namespace qmp
