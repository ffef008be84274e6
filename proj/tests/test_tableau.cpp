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

#include "tunopt/tableau.hpp"

#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "tunopt/pauli.hpp"
#include "tunopt/rng.hpp"

using namespace tunopt;

namespace {

// Uniform random Clifford-only circuit over {h, s, sdg, x, y, z, cx}.
GateCircuit random_clifford_circuit(int n, int gates, Rng& rng) {
  GateCircuit c(n);
  for (int i = 0; i < gates; ++i) {
    switch (rng.uniform_below(n >= 2 ? 7 : 6)) {
      case 0: c.append(GateKind::H, int(rng.uniform_below(n))); break;
      case 1: c.append(GateKind::S, int(rng.uniform_below(n))); break;
      case 2: c.append(GateKind::Sdg, int(rng.uniform_below(n))); break;
      case 3: c.append(GateKind::X, int(rng.uniform_below(n))); break;
      case 4: c.append(GateKind::Y, int(rng.uniform_below(n))); break;
      case 5: c.append(GateKind::Z, int(rng.uniform_below(n))); break;
      default: {
        const int a = int(rng.uniform_below(n));
        int b = int(rng.uniform_below(n - 1));
        if (b >= a) ++b;
        c.append(GateKind::CX, a, b);
        break;
      }
    }
  }
  return c;
}

std::vector<PauliAxis> all_axes(int n) {
  std::vector<PauliAxis> out;
  const std::uint64_t lim = std::uint64_t(1) << n;
  for (std::uint64_t x = 0; x < lim; ++x)
    for (std::uint64_t z = 0; z < lim; ++z) {
      if (x == 0 && z == 0) continue;
      out.emplace_back(PauliWord(n, x, z), 1);
      out.emplace_back(PauliWord(n, x, z), -1);
    }
  return out;
}

}  // namespace

TEST(tableau, identity_maps_generators_to_themselves) {
  CliffordTableau t(3);
  for (int q = 0; q < 3; ++q) {
    EXPECT_EQ(t.x_image(q).word.letter(q), 'X');
    EXPECT_EQ(t.z_image(q).word.letter(q), 'Z');
    EXPECT_EQ(t.x_image(q).sign, 1);
    EXPECT_EQ(t.z_image(q).sign, 1);
  }
  EXPECT_TRUE(t.is_valid());
  EXPECT_TRUE(t.synthesize().gates.empty());
}

TEST(tableau, hadamard_swaps_x_and_z) {
  CliffordTableau t(1);
  t.apply_h(0);
  EXPECT_EQ(to_string(t.x_image(0)), "+Z");
  EXPECT_EQ(to_string(t.z_image(0)), "+X");
}

TEST(tableau, s_gate_rules) {
  // S: X -> Y, Z -> Z; Sdg: X -> -Y.
  CliffordTableau s(1);
  s.apply_s(0);
  EXPECT_EQ(to_string(s.x_image(0)), "+Y");
  EXPECT_EQ(to_string(s.z_image(0)), "+Z");

  CliffordTableau sdg(1);
  sdg.apply_sdg(0);
  EXPECT_EQ(to_string(sdg.x_image(0)), "-Y");
  EXPECT_EQ(to_string(sdg.z_image(0)), "+Z");
}

TEST(tableau, cx_spreads_generators) {
  // CX(0,1): X0 -> X0 X1, Z1 -> Z0 Z1, X1 and Z0 fixed.
  CliffordTableau t(2);
  t.apply_cx(0, 1);
  EXPECT_EQ(to_string(t.x_image(0)), "+XX");
  EXPECT_EQ(to_string(t.x_image(1)), "+IX");
  EXPECT_EQ(to_string(t.z_image(0)), "+ZI");
  EXPECT_EQ(to_string(t.z_image(1)), "+ZZ");
}

TEST(tableau, pauli_gates_flip_signs) {
  CliffordTableau t(1);
  t.apply_x(0);
  EXPECT_EQ(to_string(t.x_image(0)), "+X");
  EXPECT_EQ(to_string(t.z_image(0)), "-Z");
  t.apply_z(0);
  EXPECT_EQ(to_string(t.x_image(0)), "-X");
  EXPECT_EQ(to_string(t.z_image(0)), "-Z");
  t.apply_y(0);
  EXPECT_EQ(to_string(t.x_image(0)), "+X");
  EXPECT_EQ(to_string(t.z_image(0)), "+Z");
}

TEST(tableau, apply_gate_rejects_t) {
  CliffordTableau t(1);
  EXPECT_THROW(t.apply_gate(Gate{GateKind::T, 0, -1}), std::invalid_argument);
  EXPECT_THROW(t.apply_gate(Gate{GateKind::Tdg, 0, -1}), std::invalid_argument);
}

// Conjugation is anchored exactly (signs included) against U P U^dagger for
// the concrete unitary of the generating gate list.
TEST(tableau, conjugate_matches_dense_on_random_circuits) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + int(rng.uniform_below(3));
    const GateCircuit c = random_clifford_circuit(n, 12, rng);
    const CliffordTableau t = CliffordTableau::from_circuit(c);
    ASSERT_TRUE(t.is_valid());
    const oracle::Mat u = oracle::dense_gates(c);
    for (int probe = 0; probe < 8; ++probe) {
      PauliAxis p = sample_axis(n, rng);
      const PauliAxis q = t.conjugate(p);
      const oracle::Mat expect = u * oracle::dense_axis(p) * u.adjoint();
      EXPECT_LT(oracle::exact_deviation(oracle::dense_axis(q), expect), 1e-12);
    }
  }
}

TEST(tableau, conjugate_exhaustive_two_qubits) {
  GateCircuit c(2);
  c.append(GateKind::H, 0);
  c.append(GateKind::CX, 0, 1);
  c.append(GateKind::S, 1);
  const CliffordTableau t = CliffordTableau::from_circuit(c);
  const oracle::Mat u = oracle::dense_gates(c);
  for (const PauliAxis& p : all_axes(2)) {
    const oracle::Mat expect = u * oracle::dense_axis(p) * u.adjoint();
    EXPECT_LT(oracle::exact_deviation(oracle::dense_axis(t.conjugate(p)), expect), 1e-12);
  }
}

TEST(tableau, composition_matches_sequential_application) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + int(rng.uniform_below(2));
    const GateCircuit c1 = random_clifford_circuit(n, 8, rng);
    const GateCircuit c2 = random_clifford_circuit(n, 8, rng);
    const CliffordTableau t1 = CliffordTableau::from_circuit(c1);
    const CliffordTableau t2 = CliffordTableau::from_circuit(c2);

    GateCircuit both = c1;
    for (const Gate& g : c2.gates) both.gates.push_back(g);
    EXPECT_EQ(t1.composed_with(t2), CliffordTableau::from_circuit(both));
  }
}

TEST(tableau, from_rows_validates_group_relations) {
  CliffordTableau t(2);
  t.apply_h(0);
  t.apply_cx(0, 1);
  std::vector<PauliAxis> xs = {t.x_image(0), t.x_image(1)};
  std::vector<PauliAxis> zs = {t.z_image(0), t.z_image(1)};
  EXPECT_EQ(CliffordTableau::from_rows(xs, zs), t);

  // X0 image commuting with the Z0 image violates the defining relations.
  std::vector<PauliAxis> bad_xs = {parse_axis("+XI"), parse_axis("+IX")};
  std::vector<PauliAxis> bad_zs = {parse_axis("+XI"), parse_axis("+IZ")};
  EXPECT_THROW(CliffordTableau::from_rows(bad_xs, bad_zs), std::invalid_argument);
  EXPECT_THROW(CliffordTableau::from_rows({parse_axis("+X")}, {}), std::invalid_argument);
}

// Synthesis must reproduce the exact tableau, and the synthesized circuit
// must act like the original one up to global phase.
TEST(tableau, synthesize_round_trip) {
  Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + int(rng.uniform_below(4));
    const GateCircuit c = random_clifford_circuit(n, 15, rng);
    const CliffordTableau t = CliffordTableau::from_circuit(c);
    const GateCircuit synth = t.synthesize();
    EXPECT_EQ(CliffordTableau::from_circuit(synth), t);
    if (n <= 3) {
      EXPECT_LT(oracle::phase_deviation(oracle::dense_gates(synth), oracle::dense_gates(c)),
                1e-12);
    }
  }
}

TEST(tableau, from_pauli_rotation_all_quarter_turns) {
  // Against the dense rotation exp(-i k pi/4 P): conjugation of every axis
  // must match exactly for k in {1, 2, 3} (k = 0 mod 4 is the identity).
  Rng rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + int(rng.uniform_below(2));
    const PauliAxis axis = sample_axis(n, rng);
    const PauliWord w = axis.word;  // positive-axis contract
    for (int k = 1; k <= 3; ++k) {
      const CliffordTableau t = CliffordTableau::from_pauli_rotation(w, k);
      ASSERT_TRUE(t.is_valid());
      const oracle::Mat u = oracle::dense_rotation(Rotation(PauliAxis(w, 1), 2 * k));
      for (const PauliAxis& p : all_axes(n)) {
        const oracle::Mat expect = u * oracle::dense_axis(p) * u.adjoint();
        EXPECT_LT(oracle::exact_deviation(oracle::dense_axis(t.conjugate(p)), expect), 1e-12)
            << "k=" << k << " axis=" << to_string(axis) << " p=" << to_string(p);
      }
    }
  }
}

TEST(tableau, from_pauli_rotation_half_turn_negates_anticommuting_rows) {
  // Regression: the k = 2 image of an anticommuting generator is -g, with no
  // residual factor of the rotation axis.
  const PauliWord w = parse_axis("+XX").word;
  const CliffordTableau t = CliffordTableau::from_pauli_rotation(w, 2);
  EXPECT_EQ(to_string(t.x_image(0)), "+XI");   // commutes with XX: fixed
  EXPECT_EQ(to_string(t.z_image(0)), "-ZI");   // anticommutes: negated
  EXPECT_EQ(to_string(t.z_image(1)), "-IZ");
  EXPECT_TRUE(t.is_valid());
}

TEST(tableau, quarter_turn_count_is_mod_4) {
  const PauliWord w = parse_axis("+XZ").word;
  EXPECT_EQ(CliffordTableau::from_pauli_rotation(w, 5), CliffordTableau::from_pauli_rotation(w, 1));
  EXPECT_EQ(CliffordTableau::from_pauli_rotation(w, -1),
            CliffordTableau::from_pauli_rotation(w, 3));
  EXPECT_EQ(CliffordTableau::from_pauli_rotation(w, 0), CliffordTableau(2));
}
