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

#include <cstdint>
#include <vector>

#include "tunopt/gate_circuit.hpp"
#include "tunopt/pauli.hpp"

namespace tunopt {

/// Clifford unitary represented by the signed images of the X_q and Z_q
/// generators under conjugation. Global phase is not tracked.
class CliffordTableau {
 public:
  /// Identity map.
  explicit CliffordTableau(int n);

  int num_qubits() const { return n_; }

  PauliAxis x_image(int q) const { return row_axis(q); }
  PauliAxis z_image(int q) const { return row_axis(n_ + q); }

  void apply_h(int q);
  void apply_s(int q);
  void apply_sdg(int q);
  void apply_x(int q);
  void apply_y(int q);
  void apply_z(int q);
  void apply_cx(int control, int target);
  /// Clifford gates only; T/Tdg raise std::invalid_argument.
  void apply_gate(const Gate& g);

  static CliffordTableau from_circuit(const GateCircuit& c);
  /// Tableau of exp(-i * quarter_turns * pi/4 * axis), i.e. the Pauli
  /// rotation by quarter_turns * pi/2 about a positive-sign word.
  static CliffordTableau from_pauli_rotation(const PauliWord& axis, int quarter_turns);
  /// Builds from explicit generator images (x_images[q] = image of X_q).
  /// Throws std::invalid_argument if the rows violate the group relations.
  static CliffordTableau from_rows(const std::vector<PauliAxis>& x_images,
                                   const std::vector<PauliAxis>& z_images);

  /// Image of the signed Pauli p under this map (U p U^dagger).
  PauliAxis conjugate(const PauliAxis& p) const;

  /// Tableau of `later * *this` (this acts first in time).
  CliffordTableau composed_with(const CliffordTableau& later) const;

  /// True iff rows pairwise satisfy the defining commutation relations
  /// (images of X_q, Z_q anticommute; all other row pairs commute).
  bool is_valid() const;

  /// Gate circuit over {h, s, sdg, cx, x, z} realizing this tableau exactly
  /// (including row signs). The identity tableau yields an empty circuit.
  GateCircuit synthesize() const;

  friend bool operator==(const CliffordTableau&, const CliffordTableau&) = default;

 private:
  PauliAxis row_axis(int r) const;
  void set_row(int r, const PauliAxis& a);

  int n_;
  // Rows 0..n-1 are images of X_q, rows n..2n-1 images of Z_q.
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint8_t> neg_;  // 1 => sign -1
};

}  // namespace tunopt
