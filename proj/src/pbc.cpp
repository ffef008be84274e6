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

#include "tunopt/errors.hpp"

namespace tunopt {

Rotation::Rotation(PauliAxis a, int angle_index) : axis(std::move(a)) {
  int km = axis.sign < 0 ? -angle_index : angle_index;
  axis.sign = 1;
  km = ((km % 8) + 8) % 8;
  if (km == 0) throw std::invalid_argument("rotation angle index is zero mod 8");
  if (km > 4) km -= 8;
  k = km;
}

PauliAxis Rotation::signed_axis() const {
  if (k != 1 && k != -1) throw std::logic_error("signed_axis requires k = +-1");
  return PauliAxis(axis.word, k);
}

PBCCircuit PBCCircuit::single_rotation(const PauliAxis& axis, int k) {
  PBCCircuit p(axis.word.num_qubits());
  p.rotations.emplace_back(axis, k);
  return p;
}

PBCCircuit gates_to_pbc(const GateCircuit& c) {
  PBCCircuit p(c.n);
  // Scan backwards, tracking the tableau of everything after the cursor.
  CliffordTableau suffix(c.n);
  std::vector<Rotation> reversed;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    const Gate& g = *it;
    if (g.kind == GateKind::T || g.kind == GateKind::Tdg) {
      const PauliAxis z_q(PauliWord(c.n, 0, 1ULL << g.q0), 1);
      const PauliAxis axis = suffix.conjugate(z_q);
      reversed.emplace_back(axis, g.kind == GateKind::T ? 1 : -1);
    } else {
      GateCircuit single(c.n);
      single.gates.push_back(g);
      suffix = CliffordTableau::from_circuit(single).composed_with(suffix);
    }
  }
  p.rotations.assign(reversed.rbegin(), reversed.rend());
  p.prefix = suffix;
  return p;
}

GateCircuit pbc_to_gates(const PBCCircuit& p) {
  GateCircuit out = p.prefix.synthesize();
  out.n = p.n;
  for (const Rotation& r : p.rotations) {
    const GateCircuit block = decompose_rotation(r.axis, r.k);
    out.gates.insert(out.gates.end(), block.gates.begin(), block.gates.end());
  }
  return out;
}

int t_count_pbc(const PBCCircuit& p) {
  int count = 0;
  for (const Rotation& r : p.rotations)
    if ((r.k & 1) != 0) ++count;
  return count;
}

std::vector<std::vector<std::size_t>> t_layers(const PBCCircuit& p) {
  std::vector<std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < p.rotations.size(); ++i) {
    const PauliWord& w = p.rotations[i].axis.word;
    // Deepest layer containing an anticommuting member blocks the push.
    std::size_t blocked = 0;  // 0 = unblocked all the way down
    for (std::size_t l = layers.size(); l-- > 0;) {
      bool anti = false;
      for (const std::size_t j : layers[l]) {
        if (!commutes(w, p.rotations[j].axis.word)) {
          anti = true;
          break;
        }
      }
      if (anti) {
        blocked = l + 1;
        break;
      }
    }
    if (blocked == layers.size()) layers.emplace_back();
    layers[blocked].push_back(i);
  }
  return layers;
}

nlohmann::ordered_json pbc_to_json(const PBCCircuit& p) {
  nlohmann::ordered_json j;
  j["n"] = p.n;
  std::vector<std::string> prefix;
  prefix.reserve(static_cast<std::size_t>(2 * p.n));
  for (int q = 0; q < p.n; ++q) prefix.push_back(to_string(p.prefix.x_image(q)));
  for (int q = 0; q < p.n; ++q) prefix.push_back(to_string(p.prefix.z_image(q)));
  j["prefix"] = prefix;
  nlohmann::ordered_json rotations = nlohmann::ordered_json::array();
  for (const Rotation& r : p.rotations) {
    nlohmann::ordered_json rj;
    rj["axis"] = to_string(r.axis);
    rj["k"] = r.k;
    rotations.push_back(rj);
  }
  j["rotations"] = rotations;
  return j;
}

PBCCircuit pbc_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("prefix") || !j.contains("rotations"))
    throw ParseError("PBC JSON requires fields n, prefix, rotations");
  try {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > 64) throw ParseError("PBC JSON: n must be in [1, 64]");
    PBCCircuit p(n);

    const auto& prefix = j.at("prefix");
    if (!prefix.is_array() || prefix.size() != static_cast<std::size_t>(2 * n))
      throw ParseError("PBC JSON: prefix must list 2n generator images");
    std::vector<PauliAxis> rows;
    rows.reserve(prefix.size());
    for (const auto& entry : prefix) {
      const PauliAxis a = parse_axis(entry.get<std::string>());
      if (a.word.num_qubits() != n) throw ParseError("PBC JSON: prefix image has wrong length");
      rows.push_back(a);
    }
    p.prefix = CliffordTableau::from_rows({rows.begin(), rows.begin() + n},
                                          {rows.begin() + n, rows.end()});

    for (const auto& entry : j.at("rotations")) {
      const PauliAxis axis = parse_axis(entry.at("axis").get<std::string>());
      if (axis.word.num_qubits() != n) throw ParseError("PBC JSON: rotation axis has wrong length");
      p.rotations.emplace_back(axis, entry.at("k").get<int>());
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("PBC JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("PBC JSON: ") + e.what());
  }
}

}  // namespace tunopt
