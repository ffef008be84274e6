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

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tunopt/gate_circuit.hpp"
#include "tunopt/pauli.hpp"
#include "tunopt/tableau.hpp"

namespace tunopt {

/// Pauli rotation by angle k*pi/4 about a canonical positive-sign axis.
/// Construction folds a negative axis sign into the angle (R_{-P}(theta) =
/// R_P(-theta)) and normalizes k into (-4, 4]; k = 0 mod 8 is rejected.
struct Rotation {
  PauliAxis axis;  // sign always +1 after canonicalization
  int k = 1;

  Rotation(PauliAxis a, int angle_index);

  /// For k = +-1 only: the rotation written as +pi/4 about a signed axis.
  PauliAxis signed_axis() const;

  friend bool operator==(const Rotation&, const Rotation&) = default;
};

/// Circuit in sequential Pauli-based-computation form: a Clifford prefix
/// followed by a time-ordered list of Pauli rotations.
struct PBCCircuit {
  int n = 1;
  CliffordTableau prefix;
  std::vector<Rotation> rotations;

  explicit PBCCircuit(int qubits) : n(qubits), prefix(qubits) {}
  static PBCCircuit single_rotation(const PauliAxis& axis, int k);

  friend bool operator==(const PBCCircuit&, const PBCCircuit&) = default;
};

/// Converts a gate circuit by sweeping backwards: Clifford gates accumulate
/// into a suffix tableau that conjugates the axes of the T/Tdg rotations
/// encountered behind them; the surviving Cliffords form the prefix.
PBCCircuit gates_to_pbc(const GateCircuit& c);

/// Synthesized prefix followed by one decomposed gate block per rotation.
GateCircuit pbc_to_gates(const PBCCircuit& p);

/// Number of odd-k rotations.
int t_count_pbc(const PBCCircuit& p);

/// Greedy T-layer partition: indices of rotations per layer, in circuit
/// order. Members of one layer commute pairwise; every member of layer i+1
/// anticommutes with some member of layer i. Each rotation is pushed past
/// all-commuting layers and settles in the earliest layer reachable.
std::vector<std::vector<std::size_t>> t_layers(const PBCCircuit& p);

nlohmann::ordered_json pbc_to_json(const PBCCircuit& p);
PBCCircuit pbc_from_json(const nlohmann::json& j);

}  // namespace tunopt
