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
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "tunopt/mcr.hpp"
#include "tunopt/pbc.hpp"
#include "tunopt/rng.hpp"

namespace tunopt {

/// One recorded expansion step, sufficient for exact replay.
struct UnoptDecision {
  std::size_t index = 0;             // rotation picked as P_i
  McrQuadruple quad;                 // inserted identity quadruple (A, B, C, D)
  bool edge = false;                 // P_i was the last rotation
  std::optional<PauliAxis> q_left;   // left exchange participant -P_i*A*B
  std::optional<PauliAxis> q_right;  // right exchange participant -C*D*P_{i+1}
};

struct UnoptRecipe {
  std::uint64_t seed = 1;
  int iterations = 0;  // 0 selects the default n^2
  bool swap_enabled = true;
  std::vector<UnoptDecision> log;  // filled by unoptimize
};

/// The identity block [A, B, C, D, -A, -B, -C, -D] as eight rotations in
/// +pi/4 form. The block multiplies out to the identity matrix exactly.
std::vector<Rotation> build_identity(const McrQuadruple& quad);

/// Applies one recorded decision: inserts the identity block immediately to
/// the right of rotation `index` and, when exchange participants are
/// recorded, wraps the left neighbour P_i (and the right neighbour P_{i+1}
/// on interior picks) into the block by MCR exchanges. Exact rewrite.
PBCCircuit apply_decision(const PBCCircuit& p, const UnoptDecision& d);

/// Samples one decision (uniform index; quadruple constrained so A, B
/// anticommute with P_i and C, D anticommute with P_{i+1} when it exists)
/// and applies it. All rotations of p must be +-pi/4.
PBCCircuit unopt_step(const PBCCircuit& p, Rng& rng, bool swap_enabled,
                      UnoptDecision* decision = nullptr);

/// Runs recipe.iterations steps (n^2 when 0), refreshing recipe.log.
/// T-count grows by exactly 8 per step without exchanges, and by 12 per
/// interior / 10 per edge step with them. Deterministic in (seed, input,
/// flags). Throws RetryCapError if a step cannot find a valid quadruple
/// after redrawing the index 100 times.
PBCCircuit unoptimize(const PBCCircuit& p, UnoptRecipe& recipe);

/// Replays a recorded log; bit-identical to the unoptimize output.
PBCCircuit replay(const PBCCircuit& p, const std::vector<UnoptDecision>& log);

nlohmann::ordered_json recipe_to_json(const UnoptRecipe& recipe);
UnoptRecipe recipe_from_json(const nlohmann::json& j);

}  // namespace tunopt
