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

#include <bit>
#include <stdexcept>

namespace tunopt {

CliffordTableau::CliffordTableau(int n) : n_(n) {
  if (n < 1 || n > 64) throw std::invalid_argument("qubit count must be in [1, 64]");
  x_.assign(static_cast<size_t>(2 * n), 0);
  z_.assign(static_cast<size_t>(2 * n), 0);
  neg_.assign(static_cast<size_t>(2 * n), 0);
  for (int q = 0; q < n; ++q) {
    x_[q] = 1ULL << q;            // image of X_q
    z_[n + q] = 1ULL << q;        // image of Z_q
  }
}

PauliAxis CliffordTableau::row_axis(int r) const {
  return PauliAxis(PauliWord(n_, x_[r], z_[r]), neg_[r] ? -1 : 1);
}

void CliffordTableau::set_row(int r, const PauliAxis& a) {
  x_[r] = a.word.x_bits();
  z_[r] = a.word.z_bits();
  neg_[r] = a.sign < 0 ? 1 : 0;
}

void CliffordTableau::apply_h(int q) {
  const std::uint64_t bit = 1ULL << q;
  for (size_t r = 0; r < x_.size(); ++r) {
    const std::uint64_t xb = x_[r] & bit, zb = z_[r] & bit;
    if (xb && zb) neg_[r] ^= 1;  // Y -> -Y
    x_[r] ^= xb ^ zb;
    z_[r] ^= xb ^ zb;
  }
}

void CliffordTableau::apply_s(int q) {
  const std::uint64_t bit = 1ULL << q;
  for (size_t r = 0; r < x_.size(); ++r) {
    if ((x_[r] & bit) && (z_[r] & bit)) neg_[r] ^= 1;  // Y -> -X
    z_[r] ^= x_[r] & bit;
  }
}

void CliffordTableau::apply_sdg(int q) {
  const std::uint64_t bit = 1ULL << q;
  for (size_t r = 0; r < x_.size(); ++r) {
    if ((x_[r] & bit) && !(z_[r] & bit)) neg_[r] ^= 1;  // X -> -Y
    z_[r] ^= x_[r] & bit;
  }
}

void CliffordTableau::apply_x(int q) {
  const std::uint64_t bit = 1ULL << q;
  for (size_t r = 0; r < x_.size(); ++r)
    if (z_[r] & bit) neg_[r] ^= 1;
}

void CliffordTableau::apply_y(int q) {
  const std::uint64_t bit = 1ULL << q;
  for (size_t r = 0; r < x_.size(); ++r)
    if (((x_[r] ^ z_[r]) & bit) != 0) neg_[r] ^= 1;
}

void CliffordTableau::apply_z(int q) {
  const std::uint64_t bit = 1ULL << q;
  for (size_t r = 0; r < x_.size(); ++r)
    if (x_[r] & bit) neg_[r] ^= 1;
}

void CliffordTableau::apply_cx(int control, int target) {
  if (control == target) throw std::invalid_argument("cx control equals target");
  const std::uint64_t cb = 1ULL << control, tb = 1ULL << target;
  for (size_t r = 0; r < x_.size(); ++r) {
    const bool xc = x_[r] & cb, zc = z_[r] & cb, xt = x_[r] & tb, zt = z_[r] & tb;
    if (xc && zt && (xt == zc)) neg_[r] ^= 1;
    if (xc) x_[r] ^= tb;
    if (zt) z_[r] ^= cb;
  }
}

void CliffordTableau::apply_gate(const Gate& g) {
  if (g.q0 < 0 || g.q0 >= n_ || (g.kind == GateKind::CX && (g.q1 < 0 || g.q1 >= n_)))
    throw std::out_of_range("gate qubit out of range");
  switch (g.kind) {
    case GateKind::H: apply_h(g.q0); break;
    case GateKind::S: apply_s(g.q0); break;
    case GateKind::Sdg: apply_sdg(g.q0); break;
    case GateKind::X: apply_x(g.q0); break;
    case GateKind::Y: apply_y(g.q0); break;
    case GateKind::Z: apply_z(g.q0); break;
    case GateKind::CX: apply_cx(g.q0, g.q1); break;
    case GateKind::T:
    case GateKind::Tdg:
      throw std::invalid_argument("tableau can only apply Clifford gates");
  }
}

CliffordTableau CliffordTableau::from_circuit(const GateCircuit& c) {
  CliffordTableau t(c.n);
  for (const Gate& g : c.gates) t.apply_gate(g);
  return t;
}

CliffordTableau CliffordTableau::from_pauli_rotation(const PauliWord& axis, int quarter_turns) {
  if (axis.is_identity()) throw std::invalid_argument("rotation axis must not be the identity");
  const int n = axis.num_qubits();
  const int kappa = ((quarter_turns % 4) + 4) % 4;
  CliffordTableau t(n);
  if (kappa == 0) return t;
  const PhasedPauli w(axis);
  for (int r = 0; r < 2 * n; ++r) {
    const PauliAxis g = t.row_axis(r);
    if (commutes(g.word, axis)) continue;
    // Anticommuting g maps to cos(theta) g + i sin(theta) g*axis with
    // theta = kappa*pi/2: a half turn negates g, odd turns give i^kappa g*axis.
    if (kappa == 2) {
      t.set_row(r, -g);
      continue;
    }
    PhasedPauli img = product(PhasedPauli(g), w);
    img.phase_exp = (img.phase_exp + kappa) % 4;
    t.set_row(r, img.to_axis());
  }
  return t;
}

CliffordTableau CliffordTableau::from_rows(const std::vector<PauliAxis>& x_images,
                                           const std::vector<PauliAxis>& z_images) {
  if (x_images.empty() || x_images.size() != z_images.size())
    throw std::invalid_argument("from_rows: need n X images and n Z images");
  const int n = static_cast<int>(x_images.size());
  CliffordTableau t(n);
  for (int q = 0; q < n; ++q) {
    if (x_images[q].word.num_qubits() != n || z_images[q].word.num_qubits() != n)
      throw std::invalid_argument("from_rows: row length mismatch");
    t.set_row(q, x_images[q]);
    t.set_row(n + q, z_images[q]);
  }
  if (!t.is_valid()) throw std::invalid_argument("from_rows: rows violate the group relations");
  return t;
}

PauliAxis CliffordTableau::conjugate(const PauliAxis& p) const {
  if (p.word.num_qubits() != n_) throw std::invalid_argument("qubit-count mismatch in conjugate");
  // p = sign * i^{#Y} * prod_q X_q^{x} Z_q^{z}; substitute generator images.
  int e0 = p.word.y_count() + (p.sign < 0 ? 2 : 0);
  PhasedPauli acc(PauliWord::identity(n_), e0);
  for (int q = 0; q < n_; ++q) {
    if ((p.word.x_bits() >> q) & 1) acc = product(acc, PhasedPauli(x_image(q)));
    if ((p.word.z_bits() >> q) & 1) acc = product(acc, PhasedPauli(z_image(q)));
  }
  if (!acc.is_hermitian()) throw std::logic_error("conjugate: image phase is imaginary");
  return acc.to_axis();
}

CliffordTableau CliffordTableau::composed_with(const CliffordTableau& later) const {
  if (later.n_ != n_) throw std::invalid_argument("qubit-count mismatch in compose");
  CliffordTableau out(n_);
  for (int r = 0; r < 2 * n_; ++r) out.set_row(r, later.conjugate(row_axis(r)));
  return out;
}

bool CliffordTableau::is_valid() const {
  for (int q = 0; q < n_; ++q) {
    if (x_image(q).word.is_identity() || z_image(q).word.is_identity()) return false;
    if (commutes(x_image(q), z_image(q))) return false;
  }
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (!commutes(x_image(a), x_image(b))) return false;
      if (!commutes(z_image(a), z_image(b))) return false;
      if (!commutes(x_image(a), z_image(b))) return false;
      if (!commutes(z_image(a), x_image(b))) return false;
    }
  }
  return true;
}

GateCircuit CliffordTableau::synthesize() const {
  CliffordTableau t = *this;
  std::vector<Gate> reduction;
  auto emit = [&](GateKind k, int a, int b = -1) {
    const Gate g{k, a, b};
    t.apply_gate(g);
    reduction.push_back(g);
  };

  for (int q = 0; q < n_; ++q) {
    // After qubits < q are fixed, both images for qubit q are supported on
    // qubits >= q (they commute with every already-fixed +-X_p, +-Z_p).

    // Stage 1: image(Z_q) -> +-Z_q.
    {
      PauliAxis r = t.z_image(q);
      for (int j = q; j < n_; ++j) {
        const char letter = r.word.letter(j);
        if (letter == 'Y') {
          emit(GateKind::Sdg, j);
          emit(GateKind::H, j);
        } else if (letter == 'X') {
          emit(GateKind::H, j);
        }
      }
      r = t.z_image(q);
      if (((r.word.z_bits() >> q) & 1) == 0) {
        const int j = std::countr_zero(r.word.z_bits());
        emit(GateKind::CX, q, j);  // pull a Z onto qubit q
      }
      std::uint64_t rest = t.z_image(q).word.z_bits() & ~(1ULL << q);
      while (rest != 0) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        emit(GateKind::CX, j, q);
      }
    }

    // Stage 2: image(X_q) -> +-X_q, leaving +-Z_q untouched.
    {
      PauliAxis r = t.x_image(q);
      for (int j = q + 1; j < n_; ++j) {
        const char letter = r.word.letter(j);
        if (letter == 'Y') {
          emit(GateKind::Sdg, j);
          emit(GateKind::H, j);
        } else if (letter == 'X') {
          emit(GateKind::H, j);
        }
      }
      if (t.x_image(q).word.letter(q) == 'Y') emit(GateKind::S, q);
      std::uint64_t rest = t.x_image(q).word.z_bits() & ~(1ULL << q);
      while (rest != 0) {
        const int j = std::countr_zero(rest);
        rest &= rest - 1;
        emit(GateKind::H, j);
        emit(GateKind::CX, q, j);
      }
    }

    if (t.x_image(q).sign < 0) emit(GateKind::Z, q);
    if (t.z_image(q).sign < 0) emit(GateKind::X, q);
  }

  if (!(t == CliffordTableau(n_))) throw std::logic_error("synthesize: reduction failed");

  // reduction * U == I, so U is the reversed, daggered reduction.
  GateCircuit out(n_);
  out.gates.reserve(reduction.size());
  for (auto it = reduction.rbegin(); it != reduction.rend(); ++it) {
    Gate g = *it;
    if (g.kind == GateKind::S)
      g.kind = GateKind::Sdg;
    else if (g.kind == GateKind::Sdg)
      g.kind = GateKind::S;
    out.gates.push_back(g);
  }
  return out;
}

}  // namespace tunopt
