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

#include "tunopt/unopt.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tunopt/errors.hpp"

namespace tunopt {

namespace {

// -X*Y*Z for pairwise anticommutation-compatible factors; the result must be
// a valid axis (Hermitian, non-identity).
PauliAxis negated_triple_product(const PauliAxis& x, const PauliAxis& y,
                                 const PauliAxis& z) {
  PhasedPauli m = product(product(PhasedPauli(x), PhasedPauli(y)), PhasedPauli(z));
  m.phase_exp = (m.phase_exp + 2) % 4;
  return m.to_axis();
}

void require_quarter_rotations(const PBCCircuit& p) {
  for (const Rotation& r : p.rotations) {
    if (r.k != 1 && r.k != -1) {
      throw std::invalid_argument(
          "unopt: every rotation must be a +-pi/4 rotation");
    }
  }
}

}  // namespace

std::vector<Rotation> build_identity(const McrQuadruple& quad) {
  const McrDiagnostic diag = check_mcr(quad.a, quad.b, quad.c, quad.d);
  if (!diag.ok) {
    throw std::invalid_argument("build_identity: " + diag.detail);
  }
  std::vector<Rotation> out;
  out.reserve(8);
  for (const PauliAxis* ax : {&quad.a, &quad.b, &quad.c, &quad.d}) {
    out.emplace_back(*ax, 1);
  }
  for (const PauliAxis* ax : {&quad.a, &quad.b, &quad.c, &quad.d}) {
    out.emplace_back(-*ax, 1);
  }
  return out;
}

PBCCircuit apply_decision(const PBCCircuit& p, const UnoptDecision& d) {
  if (d.index >= p.rotations.size()) {
    throw std::invalid_argument("apply_decision: index out of range");
  }
  const bool interior = d.index + 1 < p.rotations.size();
  if (d.edge == interior) {
    throw std::invalid_argument("apply_decision: edge flag does not match");
  }
  const PauliAxis pivot = p.rotations[d.index].signed_axis();
  if (!anticommutes(d.quad.a, pivot) || !anticommutes(d.quad.b, pivot)) {
    throw std::invalid_argument(
        "apply_decision: A and B must anticommute with the picked rotation");
  }
  std::optional<PauliAxis> next;
  if (interior) {
    next = p.rotations[d.index + 1].signed_axis();
    if (!anticommutes(d.quad.c, *next) || !anticommutes(d.quad.d, *next)) {
      throw std::invalid_argument(
          "apply_decision: C and D must anticommute with the next rotation");
    }
  }
  if (d.q_right && !next) {
    throw std::invalid_argument(
        "apply_decision: right exchange recorded on an edge pick");
  }

  PBCCircuit out = p;
  const std::vector<Rotation> block = build_identity(d.quad);
  out.rotations.insert(out.rotations.begin() + static_cast<std::ptrdiff_t>(d.index) + 1,
                       block.begin(), block.end());

  std::size_t next_pos = d.index + 9;  // position of P_{i+1} when interior
  if (d.q_left) {
    const PauliAxis expect = negated_triple_product(pivot, d.quad.a, d.quad.b);
    if (!(*d.q_left == expect)) {
      throw std::invalid_argument(
          "apply_decision: recorded left participant is inconsistent");
    }
    // [-Q_l, Q_l] to the left of P_i, then exchange (Q_l, P_i) with (A, B).
    const std::vector<Rotation> pair{Rotation(-expect, 1), Rotation(expect, 1)};
    out.rotations.insert(out.rotations.begin() + static_cast<std::ptrdiff_t>(d.index),
                         pair.begin(), pair.end());
    SwapOutcome sw = swap_mcr(out, d.index + 1);
    if (!sw.swapped) {
      throw std::logic_error("apply_decision: left exchange rejected: " + sw.error);
    }
    out = std::move(sw.circuit);
    next_pos += 2;
  }
  if (d.q_right) {
    const PauliAxis expect = negated_triple_product(d.quad.c, d.quad.d, *next);
    if (!(*d.q_right == expect)) {
      throw std::invalid_argument(
          "apply_decision: recorded right participant is inconsistent");
    }
    // [Q_r, -Q_r] to the right of P_{i+1}, then exchange (-C, -D) with
    // (P_{i+1}, Q_r).
    const std::vector<Rotation> pair{Rotation(expect, 1), Rotation(-expect, 1)};
    out.rotations.insert(out.rotations.begin() + static_cast<std::ptrdiff_t>(next_pos) + 1,
                         pair.begin(), pair.end());
    SwapOutcome sw = swap_mcr(out, next_pos - 2);
    if (!sw.swapped) {
      throw std::logic_error("apply_decision: right exchange rejected: " + sw.error);
    }
    out = std::move(sw.circuit);
  }
  return out;
}

PBCCircuit unopt_step(const PBCCircuit& p, Rng& rng, bool swap_enabled,
                      UnoptDecision* decision) {
  if (p.rotations.empty()) {
    throw std::invalid_argument("unopt_step: the circuit has no rotations");
  }
  require_quarter_rotations(p);

  UnoptDecision d;
  d.index = static_cast<std::size_t>(rng.uniform_below(p.rotations.size()));
  d.edge = d.index + 1 == p.rotations.size();
  const PauliAxis pivot = p.rotations[d.index].signed_axis();
  std::optional<PauliAxis> next;
  if (!d.edge) next = p.rotations[d.index + 1].signed_axis();

  const auto pred_ab = [&pivot](const PauliAxis& x) {
    return anticommutes(x, pivot);
  };
  std::function<bool(const PauliAxis&)> pred_cd;
  if (next) {
    const PauliAxis barrier = *next;
    pred_cd = [barrier](const PauliAxis& x) { return anticommutes(x, barrier); };
  }
  d.quad = sample_quadruple(p.n, rng, pred_ab, pred_cd);

  if (swap_enabled) {
    d.q_left = negated_triple_product(pivot, d.quad.a, d.quad.b);
    if (next) d.q_right = negated_triple_product(d.quad.c, d.quad.d, *next);
  }
  if (decision) *decision = d;
  return apply_decision(p, d);
}

PBCCircuit unoptimize(const PBCCircuit& p, UnoptRecipe& recipe) {
  if (recipe.iterations < 0) {
    throw std::invalid_argument("unoptimize: iterations must be non-negative");
  }
  const int iters = recipe.iterations > 0 ? recipe.iterations : p.n * p.n;
  recipe.iterations = iters;
  recipe.log.clear();
  recipe.log.reserve(static_cast<std::size_t>(iters));

  Rng rng(recipe.seed);
  PBCCircuit cur = p;
  const int kIndexRedrawCap = 100;
  for (int step = 0; step < iters; ++step) {
    bool applied = false;
    for (int attempt = 0; attempt < kIndexRedrawCap && !applied; ++attempt) {
      try {
        UnoptDecision d;
        PBCCircuit nxt = unopt_step(cur, rng, recipe.swap_enabled, &d);
        recipe.log.push_back(std::move(d));
        cur = std::move(nxt);
        applied = true;
      } catch (const RetryCapError&) {
        // The picked rotation admits no quadruple within the draw cap;
        // redraw the index.
      }
    }
    if (!applied) {
      throw RetryCapError("unoptimize: no valid quadruple after " +
                          std::to_string(kIndexRedrawCap) +
                          " index draws at step " + std::to_string(step));
    }
  }
  return cur;
}

PBCCircuit replay(const PBCCircuit& p, const std::vector<UnoptDecision>& log) {
  PBCCircuit cur = p;
  for (const UnoptDecision& d : log) cur = apply_decision(cur, d);
  return cur;
}

nlohmann::ordered_json recipe_to_json(const UnoptRecipe& recipe) {
  nlohmann::ordered_json j;
  j["seed"] = recipe.seed;
  j["iterations"] = recipe.iterations;
  j["swap"] = recipe.swap_enabled;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const UnoptDecision& d : recipe.log) {
    nlohmann::ordered_json e;
    e["index"] = d.index;
    e["quad"] = {to_string(d.quad.a), to_string(d.quad.b), to_string(d.quad.c),
                 to_string(d.quad.d)};
    e["edge"] = d.edge;
    e["q_left"] = d.q_left ? nlohmann::ordered_json(to_string(*d.q_left))
                           : nlohmann::ordered_json(nullptr);
    e["q_right"] = d.q_right ? nlohmann::ordered_json(to_string(*d.q_right))
                             : nlohmann::ordered_json(nullptr);
    steps.push_back(std::move(e));
  }
  j["log"] = std::move(steps);
  return j;
}

UnoptRecipe recipe_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("recipe: expected a JSON object");
  UnoptRecipe r;
  try {
    r.seed = j.at("seed").get<std::uint64_t>();
    r.iterations = j.at("iterations").get<int>();
    r.swap_enabled = j.at("swap").get<bool>();
    for (const auto& e : j.at("log")) {
      UnoptDecision d;
      d.index = e.at("index").get<std::size_t>();
      const auto& q = e.at("quad");
      if (!q.is_array() || q.size() != 4) {
        throw ParseError("recipe: quad must be an array of four axes");
      }
      d.quad.a = parse_axis(q[0].get<std::string>());
      d.quad.b = parse_axis(q[1].get<std::string>());
      d.quad.c = parse_axis(q[2].get<std::string>());
      d.quad.d = parse_axis(q[3].get<std::string>());
      d.edge = e.at("edge").get<bool>();
      if (!e.at("q_left").is_null()) {
        d.q_left = parse_axis(e.at("q_left").get<std::string>());
      }
      if (!e.at("q_right").is_null()) {
        d.q_right = parse_axis(e.at("q_right").get<std::string>());
      }
      r.log.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("recipe: ") + ex.what());
  }
  return r;
}

}  // namespace tunopt
