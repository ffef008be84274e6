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

#pragma once

#include <string>
#include <vector>

#include "tunopt/pauli.hpp"

namespace tunopt {

enum class GateKind { H, S, Sdg, X, Y, Z, CX, T, Tdg };

/// Single gate application. q1 is used only by CX (control = q0, target = q1).
struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Flat gate list over the fixed set {h, s, sdg, x, y, z, cx, t, tdg},
/// in time order (gates[0] acts first).
struct GateCircuit {
  int n = 1;
  std::vector<Gate> gates;

  GateCircuit() = default;
  explicit GateCircuit(int qubits) : n(qubits) {}

  void append(GateKind kind, int q0, int q1 = -1);

  friend bool operator==(const GateCircuit&, const GateCircuit&) = default;
};

bool is_clifford(GateKind kind);
std::string gate_name(GateKind kind);

/// Number of T and Tdg gates.
int t_count(const GateCircuit& c);

/// Reads the supported OpenQASM 2.0 subset: the version header, at most one
/// include (ignored), exactly one qreg, then gates from the fixed set.
/// Anything else raises ParseError carrying the line number.
GateCircuit parse_qasm(const std::string& text);

/// Canonical OpenQASM 2.0 text (register named q, one gate per line).
/// parse_qasm(emit_qasm(c)) == c.
std::string emit_qasm(const GateCircuit& c);

/// .qc dialect text: variable-list header, BEGIN/END body, gate tokens
/// H, S, S*, T, T*, X, Y, Z and tof for CX. Export only.
std::string emit_qc(const GateCircuit& c);

/// Gate realization of the rotation with the given axis and angle k*pi/4,
/// k in {+-1, +-2, +-3, 4} after folding the axis sign: basis changes into Z
/// on each support qubit, a CNOT chain onto the last support qubit, the
/// diagonal core (t/tdg/s/sdg/z), then the mirrored chain and basis changes.
/// One T or Tdg appears iff k is odd.
GateCircuit decompose_rotation(const PauliAxis& axis, int k);

}  // namespace tunopt
