// Copyright 2026 The tunopt Authors
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

#include "tunopt/gate_circuit.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tunopt/errors.hpp"

namespace tunopt {

namespace {

struct Statement {
  std::string text;
  int line;
};

// Splits source text into ';'-terminated statements, dropping // comments.
std::vector<Statement> split_statements(const std::string& text) {
  std::vector<Statement> out;
  std::string current;
  int line = 1;
  int start_line = 1;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      --i;
      continue;
    }
    if (c == '\n') {
      ++line;
      if (current.empty())
        start_line = line;
      else
        current.push_back(' ');
      continue;
    }
    if (c == ';') {
      out.push_back({current, start_line});
      current.clear();
      start_line = line;
      continue;
    }
    if (current.empty() && std::isspace(static_cast<unsigned char>(c))) {
      start_line = line;
      continue;
    }
    current.push_back(c);
  }
  std::string tail = current;
  size_t keep = tail.find_last_not_of(" \t");
  if (keep != std::string::npos) throw ParseError("missing ';' at end of input", line);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

// Parses "name[index]" against the declared register.
int parse_operand(const std::string& token, const std::string& reg, int n, int line) {
  const std::string t = trim(token);
  const size_t open = t.find('[');
  if (open == std::string::npos || t.back() != ']')
    throw ParseError("expected qubit reference 'reg[i]', got '" + t + "'", line);
  const std::string name = trim(t.substr(0, open));
  if (name != reg) throw ParseError("unknown register '" + name + "'", line);
  const std::string idx = t.substr(open + 1, t.size() - open - 2);
  size_t used = 0;
  int q = -1;
  try {
    q = std::stoi(idx, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid qubit index '" + idx + "'", line);
  }
  if (used != idx.size() || q < 0 || q >= n)
    throw ParseError("qubit index out of range: '" + idx + "'", line);
  return q;
}

}  // namespace

void GateCircuit::append(GateKind kind, int q0, int q1) {
  if (q0 < 0 || q0 >= n || (kind == GateKind::CX && (q1 < 0 || q1 >= n || q1 == q0)))
    throw std::invalid_argument("gate qubit out of range");
  gates.push_back(Gate{kind, q0, kind == GateKind::CX ? q1 : -1});
}

bool is_clifford(GateKind kind) { return kind != GateKind::T && kind != GateKind::Tdg; }

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::CX: return "cx";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
  }
  throw std::logic_error("unreachable");
}

int t_count(const GateCircuit& c) {
  int count = 0;
  for (const Gate& g : c.gates)
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) ++count;
  return count;
}

GateCircuit parse_qasm(const std::string& text) {
  const std::vector<Statement> statements = split_statements(text);
  size_t pos = 0;
  if (pos >= statements.size() || trim(statements[pos].text) != "OPENQASM 2.0")
    throw ParseError("expected 'OPENQASM 2.0;' header",
                     statements.empty() ? 1 : statements[0].line);
  ++pos;

  GateCircuit c;
  std::string reg;
  bool have_qreg = false;

  for (; pos < statements.size(); ++pos) {
    const std::string stmt = trim(statements[pos].text);
    const int line = statements[pos].line;
    if (stmt.empty()) continue;

    std::istringstream in(stmt);
    std::string head;
    in >> head;

    if (head == "include") {
      continue;  // library include carries no information for this subset
    }
    if (head == "qreg") {
      if (have_qreg) throw ParseError("multiple qreg declarations", line);
      std::string decl;
      std::getline(in, decl);
      decl = trim(decl);
      const size_t open = decl.find('[');
      if (open == std::string::npos || decl.back() != ']')
        throw ParseError("malformed qreg declaration", line);
      reg = trim(decl.substr(0, open));
      const std::string size = decl.substr(open + 1, decl.size() - open - 2);
      int n = 0;
      try {
        n = std::stoi(size);
      } catch (const std::exception&) {
        throw ParseError("invalid qreg size '" + size + "'", line);
      }
      if (n < 1 || n > 64) throw ParseError("qreg size must be in [1, 64]", line);
      c.n = n;
      have_qreg = true;
      continue;
    }

    if (!have_qreg) throw ParseError("gate before qreg declaration", line);

    GateKind kind;
    if (head == "h") kind = GateKind::H;
    else if (head == "s") kind = GateKind::S;
    else if (head == "sdg") kind = GateKind::Sdg;
    else if (head == "x") kind = GateKind::X;
    else if (head == "y") kind = GateKind::Y;
    else if (head == "z") kind = GateKind::Z;
    else if (head == "cx") kind = GateKind::CX;
    else if (head == "t") kind = GateKind::T;
    else if (head == "tdg") kind = GateKind::Tdg;
    else throw ParseError("unsupported gate '" + head + "'", line);

    std::string args;
    std::getline(in, args);
    std::vector<std::string> operands;
    std::string token;
    std::istringstream arg_in(args);
    while (std::getline(arg_in, token, ',')) operands.push_back(token);

    if (kind == GateKind::CX) {
      if (operands.size() != 2) throw ParseError("cx expects two operands", line);
      const int q0 = parse_operand(operands[0], reg, c.n, line);
      const int q1 = parse_operand(operands[1], reg, c.n, line);
      if (q0 == q1) throw ParseError("cx control equals target", line);
      c.append(kind, q0, q1);
    } else {
      if (operands.size() != 1)
        throw ParseError("'" + head + "' expects one operand", line);
      c.append(kind, parse_operand(operands[0], reg, c.n, line));
    }
  }
  if (!have_qreg) throw ParseError("missing qreg declaration");
  return c;
}

std::string emit_qasm(const GateCircuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << c.n << "];\n";
  for (const Gate& g : c.gates) {
    out << gate_name(g.kind) << " q[" << g.q0 << "]";
    if (g.kind == GateKind::CX) out << ",q[" << g.q1 << "]";
    out << ";\n";
  }
  return out.str();
}

std::string emit_qc(const GateCircuit& c) {
  std::ostringstream vars;
  for (int q = 0; q < c.n; ++q) vars << (q ? " " : "") << "q" << q;

  std::ostringstream out;
  out << ".v " << vars.str() << "\n";
  out << ".i " << vars.str() << "\n";
  out << "\nBEGIN\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H: out << "H q" << g.q0; break;
      case GateKind::S: out << "S q" << g.q0; break;
      case GateKind::Sdg: out << "S* q" << g.q0; break;
      case GateKind::T: out << "T q" << g.q0; break;
      case GateKind::Tdg: out << "T* q" << g.q0; break;
      case GateKind::X: out << "X q" << g.q0; break;
      case GateKind::Y: out << "Y q" << g.q0; break;
      case GateKind::Z: out << "Z q" << g.q0; break;
      case GateKind::CX: out << "tof q" << g.q0 << " q" << g.q1; break;
    }
    out << "\n";
  }
  out << "END\n";
  return out.str();
}

GateCircuit decompose_rotation(const PauliAxis& axis, int k) {
  const int n = axis.word.num_qubits();
  int km = axis.sign < 0 ? -k : k;  // fold the axis sign into the angle
  km = ((km % 8) + 8) % 8;
  if (km == 0) throw std::invalid_argument("rotation angle index is zero mod 8");
  if (km > 4) km -= 8;  // canonical range {-3..4} \ {0}

  GateCircuit c(n);
  std::vector<int> support;
  for (int q = 0; q < n; ++q)
    if (axis.word.letter(q) != 'I') support.push_back(q);

  // Basis changes into Z on every support qubit.
  for (int q : support) {
    const char letter = axis.word.letter(q);
    if (letter == 'X') {
      c.append(GateKind::H, q);
    } else if (letter == 'Y') {
      c.append(GateKind::Sdg, q);
      c.append(GateKind::H, q);
    }
  }
  // Parity chain onto the highest support qubit.
  for (size_t i = 0; i + 1 < support.size(); ++i)
    c.append(GateKind::CX, support[i], support[i + 1]);

  const int target = support.back();
  switch (km) {
    case 1: c.append(GateKind::T, target); break;
    case -1: c.append(GateKind::Tdg, target); break;
    case 2: c.append(GateKind::S, target); break;
    case -2: c.append(GateKind::Sdg, target); break;
    case 4: c.append(GateKind::Z, target); break;
    case 3:
      c.append(GateKind::Z, target);
      c.append(GateKind::Tdg, target);
      break;
    case -3:
      c.append(GateKind::Z, target);
      c.append(GateKind::T, target);
      break;
    default: throw std::logic_error("unreachable");
  }
  // Mirror of the chain and of the basis changes.
  for (size_t i = support.size(); i-- > 1;)
    c.append(GateKind::CX, support[i - 1], support[i]);
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    const char letter = axis.word.letter(*it);
    if (letter == 'X') {
      c.append(GateKind::H, *it);
    } else if (letter == 'Y') {
      c.append(GateKind::H, *it);
      c.append(GateKind::S, *it);
    }
  }
  return c;
}

}  // namespace tunopt
