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

#include "tunopt/pbc.hpp"

#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "tunopt/errors.hpp"
#include "tunopt/pauli.hpp"
#include "tunopt/rng.hpp"

using namespace tunopt;

namespace {

// Random circuit over the full Clifford+T gate set.
GateCircuit random_ct_circuit(int n, int gates, Rng& rng) {
  GateCircuit c(n);
  for (int i = 0; i < gates; ++i) {
    switch (rng.uniform_below(n >= 2 ? 9 : 8)) {
      case 0: c.append(GateKind::H, int(rng.uniform_below(n))); break;
      case 1: c.append(GateKind::S, int(rng.uniform_below(n))); break;
      case 2: c.append(GateKind::Sdg, int(rng.uniform_below(n))); break;
      case 3: c.append(GateKind::X, int(rng.uniform_below(n))); break;
      case 4: c.append(GateKind::Y, int(rng.uniform_below(n))); break;
      case 5: c.append(GateKind::Z, int(rng.uniform_below(n))); break;
      case 6: c.append(GateKind::T, int(rng.uniform_below(n))); break;
      case 7: c.append(GateKind::Tdg, int(rng.uniform_below(n))); break;
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

PBCCircuit random_pbc(int n, int rotations, Rng& rng) {
  PBCCircuit p(n);
  for (int i = 0; i < rotations; ++i) {
    int k = int(rng.uniform_below(8)) - 3;  // [-3, 4]
    if (k == 0) k = 1;
    p.rotations.emplace_back(sample_axis(n, rng), k);
  }
  return p;
}

}  // namespace

TEST(rotation, normalizes_angle_and_sign) {
  const PauliAxis z = parse_axis("+Z");
  EXPECT_EQ(Rotation(z, 5).k, -3);   // 5 = -3 mod 8, canonical range (-4, 4]
  EXPECT_EQ(Rotation(z, -4).k, 4);
  EXPECT_EQ(Rotation(z, 4).k, 4);
  EXPECT_EQ(Rotation(z, 9).k, 1);

  const Rotation r(parse_axis("-Z"), 1);  // R_{-P}(theta) = R_P(-theta)
  EXPECT_EQ(to_string(r.axis), "+Z");
  EXPECT_EQ(r.k, -1);

  EXPECT_THROW(Rotation(z, 0), std::invalid_argument);
  EXPECT_THROW(Rotation(z, 8), std::invalid_argument);
}

TEST(rotation, signed_axis_for_quarter_rotations_only) {
  EXPECT_EQ(to_string(Rotation(parse_axis("+XZ"), 1).signed_axis()), "+XZ");
  EXPECT_EQ(to_string(Rotation(parse_axis("+XZ"), -1).signed_axis()), "-XZ");
  EXPECT_EQ(to_string(Rotation(parse_axis("-XZ"), 1).signed_axis()), "-XZ");
  EXPECT_THROW(Rotation(parse_axis("+XZ"), 2).signed_axis(), std::logic_error);
}

TEST(rotation, dense_sign_fold_is_exact) {
  // R_{-P}(pi/4) and R_P(-pi/4) are the same matrix, not merely equivalent.
  const Rotation folded(parse_axis("-XY"), 1);
  EXPECT_LT(oracle::exact_deviation(oracle::dense_rotation(folded),
                                    oracle::dense_rotation(Rotation(parse_axis("+XY"), -1))),
            1e-15);
}

TEST(gates_to_pbc, t_gate_becomes_z_rotation) {
  GateCircuit c(1);
  c.append(GateKind::T, 0);
  const PBCCircuit p = gates_to_pbc(c);
  EXPECT_EQ(p.prefix, CliffordTableau(1));
  ASSERT_EQ(p.rotations.size(), 1u);
  EXPECT_EQ(to_string(p.rotations[0].axis), "+Z");
  EXPECT_EQ(p.rotations[0].k, 1);

  GateCircuit cdg(1);
  cdg.append(GateKind::Tdg, 0);
  EXPECT_EQ(gates_to_pbc(cdg).rotations[0].k, -1);
}

TEST(gates_to_pbc, trailing_clifford_conjugates_axis) {
  // t then h: the hadamard moves behind the rotation, turning Z into X.
  GateCircuit c(1);
  c.append(GateKind::T, 0);
  c.append(GateKind::H, 0);
  const PBCCircuit p = gates_to_pbc(c);
  ASSERT_EQ(p.rotations.size(), 1u);
  EXPECT_EQ(to_string(p.rotations[0].axis), "+X");
  EXPECT_EQ(p.rotations[0].k, 1);

  // h then t: the hadamard stays in the prefix; the axis is untouched.
  GateCircuit c2(1);
  c2.append(GateKind::H, 0);
  c2.append(GateKind::T, 0);
  const PBCCircuit p2 = gates_to_pbc(c2);
  EXPECT_EQ(to_string(p2.rotations[0].axis), "+Z");
  EXPECT_EQ(to_string(p2.prefix.x_image(0)), "+Z");
}

TEST(gates_to_pbc, matches_dense_on_random_circuits) {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + int(rng.uniform_below(3));
    const GateCircuit c = random_ct_circuit(n, 15, rng);
    const PBCCircuit p = gates_to_pbc(c);
    EXPECT_EQ(t_count_pbc(p), t_count(c));
    EXPECT_LT(oracle::phase_deviation(oracle::dense_pbc(p), oracle::dense_gates(c)), 1e-12);
  }
}

TEST(pbc_to_gates, matches_dense_on_random_pbc) {
  Rng rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + int(rng.uniform_below(3));
    PBCCircuit p = random_pbc(n, 6, rng);
    // Random nontrivial prefix.
    p.prefix = CliffordTableau::from_pauli_rotation(sample_axis(n, rng).word, 1);
    const GateCircuit g = pbc_to_gates(p);
    EXPECT_EQ(t_count(g), t_count_pbc(p));
    EXPECT_LT(oracle::phase_deviation(oracle::dense_gates(g), oracle::dense_pbc(p)), 1e-12);
  }
}

TEST(pbc_round_trip, gates_to_pbc_to_gates) {
  Rng rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    const GateCircuit c = random_ct_circuit(2, 12, rng);
    const GateCircuit back = pbc_to_gates(gates_to_pbc(c));
    EXPECT_LT(oracle::phase_deviation(oracle::dense_gates(back), oracle::dense_gates(c)), 1e-12);
  }
}

TEST(t_count_pbc, counts_odd_angles_only) {
  PBCCircuit p(2);
  p.rotations.emplace_back(parse_axis("+XI"), 1);
  p.rotations.emplace_back(parse_axis("+IZ"), 2);
  p.rotations.emplace_back(parse_axis("+YY"), -3);
  p.rotations.emplace_back(parse_axis("+ZZ"), 4);
  EXPECT_EQ(t_count_pbc(p), 2);
}

TEST(t_layers, commuting_rotations_share_a_layer) {
  PBCCircuit p(2);
  p.rotations.emplace_back(parse_axis("+ZI"), 1);
  p.rotations.emplace_back(parse_axis("+IZ"), 1);
  p.rotations.emplace_back(parse_axis("+XI"), 1);
  const auto layers = t_layers(p);
  ASSERT_EQ(layers.size(), 2u);
  EXPECT_EQ(layers[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(layers[1], (std::vector<std::size_t>{2}));
}

TEST(t_layers, rotation_settles_in_earliest_reachable_layer) {
  // The last rotation commutes with everything in layer 1 but anticommutes
  // with layer 0, so it lands in layer 1 even though layer 2 exists.
  PBCCircuit p(2);
  p.rotations.emplace_back(parse_axis("+ZZ"), 1);  // layer 0
  p.rotations.emplace_back(parse_axis("+XI"), 1);  // layer 1 (anticommutes ZZ)
  p.rotations.emplace_back(parse_axis("+IX"), 1);  // layer 1 (commutes with XI)
  p.rotations.emplace_back(parse_axis("+ZI"), 1);  // layer 2 (anticommutes XI)
  p.rotations.emplace_back(parse_axis("+IZ"), 1);  // anticommutes IX, commutes ZI
  const auto layers = t_layers(p);
  ASSERT_EQ(layers.size(), 3u);
  EXPECT_EQ(layers[1], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(layers[2], (std::vector<std::size_t>{3, 4}));
}

TEST(t_layers, every_rotation_is_assigned) {
  Rng rng(73);
  const PBCCircuit p = random_pbc(3, 20, rng);
  const auto layers = t_layers(p);
  std::size_t total = 0;
  for (const auto& layer : layers) {
    total += layer.size();
    // Members of one layer pairwise commute.
    for (std::size_t i = 0; i < layer.size(); ++i)
      for (std::size_t j = i + 1; j < layer.size(); ++j)
        EXPECT_TRUE(commutes(p.rotations[layer[i]].axis, p.rotations[layer[j]].axis));
  }
  EXPECT_EQ(total, p.rotations.size());
}

TEST(pbc_json, round_trip_preserves_circuit) {
  Rng rng(79);
  PBCCircuit p = random_pbc(3, 8, rng);
  p.prefix = CliffordTableau::from_pauli_rotation(parse_axis("+XYZ").word, 1);
  const PBCCircuit back = pbc_from_json(pbc_to_json(p));
  EXPECT_EQ(back, p);
}

TEST(pbc_json, golden_shape) {
  const PBCCircuit p = PBCCircuit::single_rotation(parse_axis("-ZZ"), 1);
  const nlohmann::ordered_json j = pbc_to_json(p);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["prefix"].size(), 4u);
  EXPECT_EQ(j["prefix"][0], "+XI");
  ASSERT_EQ(j["rotations"].size(), 1u);
  EXPECT_EQ(j["rotations"][0]["axis"], "+ZZ");  // sign folded into k
  EXPECT_EQ(j["rotations"][0]["k"], -1);
}

TEST(pbc_json, rejects_malformed_payloads) {
  EXPECT_THROW(pbc_from_json(nlohmann::json::parse("[]")), ParseError);
  EXPECT_THROW(pbc_from_json(nlohmann::json::parse(R"({"n": 2})")), ParseError);
  EXPECT_THROW(pbc_from_json(nlohmann::json::parse(
                   R"({"n": 0, "prefix": [], "rotations": []})")),
               ParseError);
  // Wrong prefix arity.
  EXPECT_THROW(pbc_from_json(nlohmann::json::parse(
                   R"({"n": 2, "prefix": ["+XI"], "rotations": []})")),
               ParseError);
  // Prefix rows violating the group relations.
  EXPECT_THROW(pbc_from_json(nlohmann::json::parse(
                   R"({"n": 1, "prefix": ["+X", "+X"], "rotations": []})")),
               ParseError);
  // Zero angle index.
  EXPECT_THROW(pbc_from_json(nlohmann::json::parse(
                   R"({"n": 1, "prefix": ["+X", "+Z"],
                       "rotations": [{"axis": "+Z", "k": 0}]})")),
               ParseError);
  // Bad axis text.
  EXPECT_THROW(pbc_from_json(nlohmann::json::parse(
                   R"({"n": 1, "prefix": ["+X", "+Z"],
                       "rotations": [{"axis": "QQ", "k": 1}]})")),
               ParseError);
}

TEST(single_rotation, builds_one_rotation_over_identity_prefix) {
  const PBCCircuit p = PBCCircuit::single_rotation(parse_axis("+ZZZ"), 1);
  EXPECT_EQ(p.n, 3);
  EXPECT_EQ(p.prefix, CliffordTableau(3));
  ASSERT_EQ(p.rotations.size(), 1u);
  EXPECT_EQ(t_count_pbc(p), 1);
}
