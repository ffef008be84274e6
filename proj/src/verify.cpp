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

#include "tunopt/verify.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace tunopt {

namespace {

using cplx = std::complex<double>;

constexpr cplx kI{0.0, 1.0};

// Qubit q occupies index bit (n - 1 - q): qubit 0 is the leftmost tensor
// factor, i.e. the most significant bit.
std::uint64_t index_mask(const std::uint64_t qubit_mask, int n) {
  std::uint64_t out = 0;
  for (int q = 0; q < n; ++q)
    if ((qubit_mask >> q) & 1) out |= 1ULL << (n - 1 - q);
  return out;
}

struct Gate2x2 {
  cplx m00, m01, m10, m11;
};

Gate2x2 single_qubit_matrix(GateKind kind) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const cplx t_phase = std::exp(kI * (std::numbers::pi / 4.0));
  switch (kind) {
    case GateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::S: return {1.0, 0.0, 0.0, kI};
    case GateKind::Sdg: return {1.0, 0.0, 0.0, -kI};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Y: return {0.0, -kI, kI, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::T: return {1.0, 0.0, 0.0, t_phase};
    case GateKind::Tdg: return {1.0, 0.0, 0.0, std::conj(t_phase)};
    case GateKind::CX: break;
  }
  throw std::logic_error("not a single-qubit gate");
}

// Applies G (acting on the left) to a set of column vectors in place.
void apply_gate_inplace(Eigen::MatrixXcd& m, const Gate& g, int n) {
  const Eigen::Index dim = m.rows();
  if (g.kind == GateKind::CX) {
    const std::uint64_t cbit = 1ULL << (n - 1 - g.q0);
    const std::uint64_t tbit = 1ULL << (n - 1 - g.q1);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const auto ur = static_cast<std::uint64_t>(r);
      if ((ur & cbit) && !(ur & tbit)) m.row(r).swap(m.row(static_cast<Eigen::Index>(ur | tbit)));
    }
    return;
  }
  const Gate2x2 u = single_qubit_matrix(g.kind);
  const std::uint64_t qbit = 1ULL << (n - 1 - g.q0);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const auto ur = static_cast<std::uint64_t>(r);
    if (ur & qbit) continue;
    const auto r1 = static_cast<Eigen::Index>(ur | qbit);
    const Eigen::RowVectorXcd top = m.row(r);
    const Eigen::RowVectorXcd bottom = m.row(r1);
    m.row(r) = u.m00 * top + u.m01 * bottom;
    m.row(r1) = u.m10 * top + u.m11 * bottom;
  }
}

// Applies R_axis(k*pi/4) = cos(k*pi/8) I - i sin(k*pi/8) P on the left.
void apply_rotation_inplace(Eigen::MatrixXcd& m, const Rotation& rot, int n) {
  const double half = static_cast<double>(rot.k) * std::numbers::pi / 8.0;
  const cplx c = std::cos(half);
  const cplx s = -kI * std::sin(half);
  const std::uint64_t fx = index_mask(rot.axis.word.x_bits(), n);
  const std::uint64_t fz = index_mask(rot.axis.word.z_bits(), n);
  const int y_count = rot.axis.word.y_count();
  cplx y_phase = 1.0;
  for (int i = 0; i < (y_count & 3); ++i) y_phase *= kI;

  Eigen::MatrixXcd pm(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const auto ur = static_cast<std::uint64_t>(r);
    const double sign = (std::popcount(ur & fz) & 1) ? -1.0 : 1.0;
    pm.row(static_cast<Eigen::Index>(ur ^ fx)) = (y_phase * sign) * m.row(r);
  }
  m = c * m + s * pm;
}

void check_cap(int n, int max_qubits) {
  if (n > max_qubits)
    throw std::invalid_argument("dense unitary requested for " + std::to_string(n) +
                                " qubits (cap " + std::to_string(max_qubits) + ")");
}

}  // namespace

Eigen::MatrixXcd dense_unitary(const GateCircuit& c, int max_qubits) {
  check_cap(c.n, max_qubits);
  const Eigen::Index dim = Eigen::Index(1) << c.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (const Gate& g : c.gates) apply_gate_inplace(m, g, c.n);
  return m;
}

Eigen::MatrixXcd dense_unitary(const PBCCircuit& p, int max_qubits) {
  check_cap(p.n, max_qubits);
  const GateCircuit prefix = p.prefix.synthesize();
  Eigen::MatrixXcd m = dense_unitary(prefix, max_qubits);
  for (const Rotation& r : p.rotations) apply_rotation_inplace(m, r, p.n);
  return m;
}

Eigen::VectorXcd apply_circuit(const GateCircuit& c, Eigen::VectorXcd state) {
  Eigen::MatrixXcd m = std::move(state);
  for (const Gate& g : c.gates) apply_gate_inplace(m, g, c.n);
  return m;
}

Eigen::VectorXcd apply_circuit(const PBCCircuit& p, Eigen::VectorXcd state) {
  Eigen::MatrixXcd m = apply_circuit(p.prefix.synthesize(), std::move(state));
  for (const Rotation& r : p.rotations) apply_rotation_inplace(m, r, p.n);
  return m;
}

Eigen::VectorXcd random_product_state(int n, Rng& rng) {
  std::vector<cplx> a0(static_cast<size_t>(n)), a1(static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) {
    const double theta = std::acos(1.0 - 2.0 * rng.next_unit());
    const double phi = 2.0 * std::numbers::pi * rng.next_unit();
    a0[static_cast<size_t>(q)] = std::cos(theta / 2.0);
    a1[static_cast<size_t>(q)] = std::exp(kI * phi) * std::sin(theta / 2.0);
  }
  const Eigen::Index dim = Eigen::Index(1) << n;
  Eigen::VectorXcd state(dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    cplx amp = 1.0;
    for (int q = 0; q < n; ++q) {
      const bool one = (static_cast<std::uint64_t>(b) >> (n - 1 - q)) & 1;
      amp *= one ? a1[static_cast<size_t>(q)] : a0[static_cast<size_t>(q)];
    }
    state(b) = amp;
  }
  return state;
}

EquivalenceReport check_equiv_dense_matrices(const Eigen::MatrixXcd& u,
                                             const Eigen::MatrixXcd& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("dimension mismatch in check_equiv");
  EquivalenceReport report;
  report.method = "dense";
  const Eigen::MatrixXcd w = v.adjoint() * u;
  Eigen::Index best = 0;
  for (Eigen::Index d = 1; d < w.rows(); ++d)
    if (std::abs(w(d, d)) > std::abs(w(best, best))) best = d;
  const double phase = std::arg(w(best, best));
  const cplx align = std::exp(kI * phase);
  const Eigen::MatrixXcd delta =
      w - align * Eigen::MatrixXcd::Identity(w.rows(), w.cols());
  report.max_deviation = delta.cwiseAbs().maxCoeff();
  report.equivalent = report.max_deviation <= tol;
  if (report.equivalent) report.phase = phase;
  return report;
}

nlohmann::ordered_json EquivalenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["method"] = method;
  j["equivalent"] = equivalent;
  j["max_deviation"] = max_deviation;
  if (phase)
    j["phase"] = *phase;
  else
    j["phase"] = nullptr;
  return j;
}

}  // namespace tunopt
