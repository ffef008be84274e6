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

#include "tunopt/mcr.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "tunopt/errors.hpp"

namespace tunopt {

namespace {

// Orderable encoding for canonical forms.
using AxisKey = std::tuple<std::uint64_t, std::uint64_t, int>;

AxisKey axis_key(const PauliAxis& a) {
  return {a.word.x_bits(), a.word.z_bits(), a.sign > 0 ? 0 : 1};
}

// true iff u == -v as phased operators (words equal, phases opposed).
bool opposes(const PhasedPauli& u, const PhasedPauli& v) {
  return u.word == v.word && ((u.phase_exp + 2) % 4) == v.phase_exp;
}

}  // namespace

McrDiagnostic check_mcr(const PauliAxis& a, const PauliAxis& b, const PauliAxis& c,
                        const PauliAxis& d) {
  const int n = a.word.num_qubits();
  if (b.word.num_qubits() != n || c.word.num_qubits() != n || d.word.num_qubits() != n)
    throw std::invalid_argument("qubit-count mismatch in check_mcr");

  McrDiagnostic diag;
  const PauliAxis* axes[4] = {&a, &b, &c, &d};
  const char* names = "ABCD";
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (axes[i]->word == axes[j]->word) {
        diag.detail = std::string("words ") + names[i] + " and " + names[j] + " are not distinct";
        return diag;
      }
    }
  }
  if (!commutes(a, b)) {
    diag.detail = "condition 1 fails: [A,B] != 0";
    return diag;
  }
  if (!commutes(c, d)) {
    diag.detail = "condition 1 fails: [C,D] != 0";
    return diag;
  }
  const std::pair<int, int> cross[4] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  for (const auto& [i, j] : cross) {
    if (commutes(*axes[i], *axes[j])) {
      diag.detail = std::string("condition 2 fails: {") + names[i] + "," + names[j] + "} != 0";
      return diag;
    }
  }
  // [A+B, C+D] = 2(AC + AD + BC + BD) under condition 2; the sum vanishes
  // exactly when AC = -BD and AD = -BC as phased operators.
  if (!opposes(product(a, c), product(b, d)) || !opposes(product(a, d), product(b, c))) {
    diag.detail = "condition 3 fails: [A+B, C+D] != 0";
    return diag;
  }
  diag.ok = true;
  return diag;
}

PauliAxis complete_quadruple(const PauliAxis& a, const PauliAxis& b, const PauliAxis& c) {
  return minus_abc(a, b, c);
}

McrQuadruple sample_quadruple(int n, Rng& rng,
                              const std::function<bool(const PauliAxis&)>& pred_ab,
                              const std::function<bool(const PauliAxis&)>& pred_cd, int cap) {
  if (n < 1 || n > 64) throw std::invalid_argument("qubit count must be in [1, 64]");
  for (int attempt = 0; attempt < cap; ++attempt) {
    const PauliAxis a = sample_axis(n, rng);
    const PauliAxis b =
        sample_axis(n, rng, [&](const PauliAxis& x) { return x.word != a.word && commutes(x, a); });
    const PauliAxis c = sample_axis(
        n, rng, [&](const PauliAxis& x) { return anticommutes(x, a) && anticommutes(x, b); });
    const PauliAxis d = minus_abc(a, b, c);
    if (pred_ab && (!pred_ab(a) || !pred_ab(b))) continue;
    if (pred_cd && (!pred_cd(c) || !pred_cd(d))) continue;
    return McrQuadruple{a, b, c, d};
  }
  throw RetryCapError("sample_quadruple: retry cap exhausted");
}

SwapOutcome swap_mcr(const PBCCircuit& p, std::size_t first) {
  if (first + 4 > p.rotations.size()) throw std::out_of_range("swap_mcr: index out of range");
  SwapOutcome out{p, false, ""};
  for (std::size_t i = first; i < first + 4; ++i) {
    const int k = p.rotations[i].k;
    if (k != 1 && k != -1) {
      out.error = "rotation " + std::to_string(i) + " is not a +-pi/4 rotation";
      return out;
    }
  }
  const McrDiagnostic diag =
      check_mcr(p.rotations[first].signed_axis(), p.rotations[first + 1].signed_axis(),
                p.rotations[first + 2].signed_axis(), p.rotations[first + 3].signed_axis());
  if (!diag.ok) {
    out.error = diag.detail;
    return out;
  }
  out.circuit.rotations[first] = p.rotations[first + 2];
  out.circuit.rotations[first + 1] = p.rotations[first + 3];
  out.circuit.rotations[first + 2] = p.rotations[first];
  out.circuit.rotations[first + 3] = p.rotations[first + 1];
  out.swapped = true;
  return out;
}

std::uint64_t count_quadruples(int n) {
  if (n < 1 || n > 31) throw std::invalid_argument("qubit count must be in [1, 31]");
  const unsigned __int128 f = static_cast<unsigned __int128>(1) << (2 * n);
  const unsigned __int128 total = f * (f - 1) * (f - 4) / 8;
  if (total > static_cast<unsigned __int128>(~0ULL))
    throw std::overflow_error("count_quadruples: result exceeds 64 bits");
  return static_cast<std::uint64_t>(total);
}

std::vector<McrQuadruple> enumerate_quadruples(int n) {
  if (n < 1 || n > 2) throw std::invalid_argument("enumerate_quadruples supports n <= 2 only");

  std::vector<PauliAxis> axes;
  const std::uint64_t words = 1ULL << (2 * n);
  for (std::uint64_t w = 1; w < words; ++w) {
    const std::uint64_t x = w & ((1ULL << n) - 1);
    const std::uint64_t z = w >> n;
    for (const int sign : {1, -1}) axes.emplace_back(PauliWord(n, x, z), sign);
  }

  using PairKey = std::pair<AxisKey, AxisKey>;
  using QuadKey = std::pair<PairKey, PairKey>;
  std::map<QuadKey, McrQuadruple> classes;

  for (const PauliAxis& a : axes) {
    for (const PauliAxis& b : axes) {
      if (a.word == b.word || !commutes(a, b)) continue;
      for (const PauliAxis& c : axes) {
        if (commutes(c, a) || commutes(c, b)) continue;
        const PauliAxis d = minus_abc(a, b, c);
        PairKey left{axis_key(a), axis_key(b)};
        if (left.second < left.first) std::swap(left.first, left.second);
        PairKey right{axis_key(c), axis_key(d)};
        if (right.second < right.first) std::swap(right.first, right.second);
        QuadKey key{left, right};
        bool flipped = false;
        if (key.second < key.first) {
          std::swap(key.first, key.second);
          flipped = true;
        }
        if (classes.contains(key)) continue;
        classes.emplace(key, flipped ? McrQuadruple{c, d, a, b} : McrQuadruple{a, b, c, d});
      }
    }
  }

  if (classes.size() != count_quadruples(n))
    throw std::logic_error("enumerate_quadruples: class count mismatch");
  std::vector<McrQuadruple> out;
  out.reserve(classes.size());
  for (const auto& [key, quad] : classes) out.push_back(quad);
  return out;
}

}  // namespace tunopt
