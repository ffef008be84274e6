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
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tunopt/pauli.hpp"
#include "tunopt/pbc.hpp"
#include "tunopt/rng.hpp"

namespace tunopt {

struct McrDiagnostic {
  bool ok = false;
  std::string detail;  // empty when ok, otherwise names the first failed condition
};

/// Checks the commutation structure that lets the rotation pairs (A, B) and
/// (C, D) trade places: pairwise distinct words; [A,B] = [C,D] = 0; the four
/// cross pairs anticommute; and [A+B, C+D] = 0 exactly, signs included.
McrDiagnostic check_mcr(const PauliAxis& a, const PauliAxis& b, const PauliAxis& c,
                        const PauliAxis& d);

struct McrQuadruple {
  PauliAxis a, b, c, d;
};

/// The unique fourth member D = -A*B*C (see minus_abc for preconditions).
PauliAxis complete_quadruple(const PauliAxis& a, const PauliAxis& b, const PauliAxis& c);

/// Draws A uniformly, B uniformly among axes commuting with A with a
/// distinct word, C uniformly among axes anticommuting with both, and
/// derives D; whole draws are rejected until the optional predicates hold
/// on A and B (pred_ab) and on C and D (pred_cd). Throws RetryCapError when
/// `cap` draws are exhausted (n = 1 always exhausts: no quadruple exists).
McrQuadruple sample_quadruple(int n, Rng& rng,
                              const std::function<bool(const PauliAxis&)>& pred_ab = {},
                              const std::function<bool(const PauliAxis&)>& pred_cd = {},
                              int cap = 10000);

struct SwapOutcome {
  PBCCircuit circuit;
  bool swapped = false;
  std::string error;  // empty when swapped
};

/// Exchanges the consecutive rotation blocks (first, first+1) and
/// (first+2, first+3). All four rotations must be +-pi/4; their angle signs
/// are folded into the axes, which must pass check_mcr. The exchanged
/// circuit implements the same unitary exactly. On failure the input
/// circuit is returned unchanged with `error` set.
SwapOutcome swap_mcr(const PBCCircuit& p, std::size_t first);

/// Number of unordered valid quadruple classes on n qubits:
/// 4^n (4^n - 1)(4^n - 4) / 8. Throws std::overflow_error when the value
/// exceeds 64 bits.
std::uint64_t count_quadruples(int n);

/// Explicit enumeration for n <= 2, one canonical representative per class,
/// in deterministic order. Size always equals count_quadruples(n).
std::vector<McrQuadruple> enumerate_quadruples(int n);

}  // namespace tunopt
