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

#include "tunopt/optimizer.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tunopt/mcr.hpp"
#include "tunopt/pauli.hpp"
#include "tunopt/tableau.hpp"

namespace tunopt {

namespace {

// Form of r after the Clifford R_w(quarter*pi/2), originally to r's right,
// hops left past it. Anticommuting axes map to cos(theta)*P + i*sin(theta)*P*w
// with theta = quarter*pi/2, which stays a single Pauli axis.
Rotation hop_clifford_left(const Rotation& r, const PauliWord& w, int quarter) {
  const int q = ((quarter % 4) + 4) % 4;
  if (q == 0 || commutes(r.axis.word, w)) return r;
  if (q == 2) return Rotation(PauliAxis(r.axis.word, -1), r.k);
  PhasedPauli img = product(PhasedPauli(r.axis.word), PhasedPauli(w));
  img.phase_exp = (img.phase_exp + q) % 4;
  return Rotation(img.to_axis(), r.k);
}

struct SlotEmit {
  std::optional<std::pair<PauliWord, int>> clifford;  // (word, quarter turns)
  std::optional<int> k;                               // residual +-pi/4 part
};

}  // namespace

PBCCircuit merge_pass(const PBCCircuit& p) {
  PBCCircuit cur = p;
  for (;;) {
    const std::vector<std::vector<std::size_t>> layers = t_layers(cur);
    const std::size_t len = cur.rotations.size();
    std::vector<char> keep(len, 1);
    std::vector<char> has_emit(len, 0);
    std::vector<SlotEmit> emit(len);
    bool changed = false;

    for (const auto& layer : layers) {
      // Group the layer's members by axis word, keyed by first occurrence.
      std::vector<std::pair<PauliWord, std::vector<std::size_t>>> groups;
      for (const std::size_t idx : layer) {
        const PauliWord& w = cur.rotations[idx].axis.word;
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&w](const auto& g) { return g.first == w; });
        if (it == groups.end()) {
          groups.emplace_back(w, std::vector<std::size_t>{idx});
        } else {
          it->second.push_back(idx);
        }
      }
      for (const auto& [word, members] : groups) {
        int ksum = 0;
        for (const std::size_t idx : members) ksum += cur.rotations[idx].k;
        ksum = ((ksum % 8) + 8) % 8;
        std::optional<int> quarters;
        std::optional<int> residual;
        switch (ksum) {
          case 0: break;
          case 1: residual = 1; break;
          case 2: quarters = 1; break;
          case 3: quarters = 2; residual = -1; break;
          case 4: quarters = 2; break;
          case 5: quarters = 2; residual = 1; break;
          case 6: quarters = 3; break;
          case 7: residual = -1; break;
          default: break;
        }
        const std::size_t first = members.front();
        if (members.size() == 1 && !quarters && residual &&
            *residual == cur.rotations[first].k) {
          continue;  // already a lone +-pi/4 rotation
        }
        changed = true;
        for (const std::size_t idx : members) keep[idx] = 0;
        has_emit[first] = 1;
        if (quarters) emit[first].clifford = std::make_pair(word, *quarters);
        emit[first].k = residual;
      }
    }
    if (!changed) return cur;

    // Rebuild in slot order. An emitted Clifford hops left over everything
    // already rebuilt and lands in the prefix.
    std::vector<Rotation> result;
    result.reserve(len);
    CliffordTableau prefix = cur.prefix;
    for (std::size_t i = 0; i < len; ++i) {
      if (has_emit[i]) {
        const SlotEmit& e = emit[i];
        if (e.clifford) {
          const PauliWord& w = e.clifford->first;
          const int quarters = e.clifford->second;
          for (Rotation& r : result) r = hop_clifford_left(r, w, quarters);
          prefix = prefix.composed_with(
              CliffordTableau::from_pauli_rotation(w, quarters));
        }
        if (e.k) {
          result.emplace_back(PauliAxis(cur.rotations[i].axis.word, 1), *e.k);
        }
      } else if (keep[i]) {
        result.push_back(cur.rotations[i]);
      }
    }
    cur.rotations = std::move(result);
    cur.prefix = prefix;
  }
}

PBCCircuit mcr_swap_pass(const PBCCircuit& p, const OptimizerConfig& cfg) {
  if (cfg.pair_cap < 1) {
    throw std::invalid_argument("mcr_swap_pass: pair_cap must be positive");
  }
  PBCCircuit best = p;
  for (int round = 0; round < cfg.max_rounds; ++round) {
    const std::vector<std::vector<std::size_t>> layers = t_layers(best);
    if (layers.size() < 2) break;

    // Normalized view: members layer by layer, original order inside each
    // layer. Every element commutes with all earlier elements of deeper
    // layers, so this reordering is exact.
    PBCCircuit norm(best.n);
    norm.prefix = best.prefix;
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    spans.reserve(layers.size());
    for (const auto& layer : layers) {
      const std::size_t begin = norm.rotations.size();
      for (const std::size_t idx : layer) norm.rotations.push_back(best.rotations[idx]);
      spans.emplace_back(begin, norm.rotations.size());
    }
    const int t_now = t_count_pbc(best);

    const auto quarter_pairs = [&](const std::pair<std::size_t, std::size_t>& span) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (std::size_t i = span.first; i < span.second; ++i) {
        if (norm.rotations[i].k != 1 && norm.rotations[i].k != -1) continue;
        for (std::size_t j = i + 1; j < span.second; ++j) {
          if (norm.rotations[j].k != 1 && norm.rotations[j].k != -1) continue;
          out.emplace_back(i, j);
          if (out.size() >= static_cast<std::size_t>(cfg.pair_cap)) return out;
        }
      }
      return out;
    };

    bool improved = false;
    for (std::size_t b = 0; b + 1 < spans.size() && !improved; ++b) {
      const auto left = quarter_pairs(spans[b]);
      const auto right = quarter_pairs(spans[b + 1]);
      for (const auto& lp : left) {
        for (const auto& rp : right) {
          const PauliAxis a = norm.rotations[lp.first].signed_axis();
          const PauliAxis bb = norm.rotations[lp.second].signed_axis();
          const PauliAxis c = norm.rotations[rp.first].signed_axis();
          const PauliAxis d = norm.rotations[rp.second].signed_axis();
          if (!check_mcr(a, bb, c, d).ok) continue;

          // Slide the pairs to the boundary (legal inside a layer), exchange
          // the blocks, then merge.
          PBCCircuit tent(norm.n);
          tent.prefix = norm.prefix;
          tent.rotations.reserve(norm.rotations.size());
          for (std::size_t s = 0; s < spans.size(); ++s) {
            const auto [lo, hi] = spans[s];
            if (s == b) {
              for (std::size_t i = lo; i < hi; ++i) {
                if (i != lp.first && i != lp.second) tent.rotations.push_back(norm.rotations[i]);
              }
              tent.rotations.push_back(norm.rotations[lp.first]);
              tent.rotations.push_back(norm.rotations[lp.second]);
            } else if (s == b + 1) {
              tent.rotations.push_back(norm.rotations[rp.first]);
              tent.rotations.push_back(norm.rotations[rp.second]);
              for (std::size_t i = lo; i < hi; ++i) {
                if (i != rp.first && i != rp.second) tent.rotations.push_back(norm.rotations[i]);
              }
            } else {
              for (std::size_t i = lo; i < hi; ++i) tent.rotations.push_back(norm.rotations[i]);
            }
          }

          SwapOutcome sw = swap_mcr(tent, spans[b].second - 2);
          if (!sw.swapped) continue;
          PBCCircuit merged = merge_pass(sw.circuit);
          if (t_count_pbc(merged) < t_now) {
            best = std::move(merged);
            improved = true;
            break;
          }
        }
        if (improved) break;
      }
    }
    if (!improved) break;
  }
  return best;
}

std::pair<PBCCircuit, OptimizeReport> optimize(const PBCCircuit& p,
                                               const OptimizerConfig& cfg) {
  OptimizeReport report;
  report.initial_t = t_count_pbc(p);
  PBCCircuit cur = p;
  for (int round = 0; round < cfg.max_rounds; ++round) {
    const PBCCircuit before = cur;
    for (const std::string& pass : cfg.passes) {
      const int t_before = t_count_pbc(cur);
      if (pass == "merge") {
        cur = merge_pass(cur);
      } else if (pass == "mcr_swap") {
        cur = mcr_swap_pass(cur, cfg);
      } else {
        throw std::invalid_argument("optimize: unknown pass '" + pass + "'");
      }
      report.deltas.push_back({pass, t_before, t_count_pbc(cur)});
    }
    ++report.rounds;
    if (cur == before) break;
  }
  report.final_t = t_count_pbc(cur);
  return {cur, report};
}

}  // namespace tunopt
