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
#include <utility>
#include <vector>

#include "tunopt/pbc.hpp"

namespace tunopt {

struct OptimizerConfig {
  std::vector<std::string> passes{"merge", "mcr_swap"};
  int max_rounds = 32;
  int pair_cap = 64;  // commuting pairs enumerated per layer side
};

/// Merges rotations sharing an axis within one T layer to a fixed point.
/// Angle sums that leave the +-pi/4 range split into a Clifford part that is
/// absorbed into the prefix (conjugating everything before it) and at most
/// one residual +-pi/4 rotation. Exact rewrite.
PBCCircuit merge_pass(const PBCCircuit& p);

/// Scans adjacent T layers for commuting +-pi/4 pairs forming a valid
/// multi-product commutation quadruple across the boundary, exchanges the
/// first candidate whose exchange-then-merge strictly lowers the T-count,
/// and repeats. Returns the input unchanged when no exchange helps.
PBCCircuit mcr_swap_pass(const PBCCircuit& p, const OptimizerConfig& cfg = {});

struct PassDelta {
  std::string pass;
  int t_before = 0;
  int t_after = 0;
};

struct OptimizeReport {
  int initial_t = 0;
  int final_t = 0;
  int rounds = 0;
  std::vector<PassDelta> deltas;
};

/// Runs the configured passes round-robin until a full round changes
/// nothing or max_rounds is reached.
std::pair<PBCCircuit, OptimizeReport> optimize(const PBCCircuit& p,
                                               const OptimizerConfig& cfg = {});

}  // namespace tunopt
