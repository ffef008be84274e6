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

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "tunopt/gate_circuit.hpp"
#include "tunopt/pbc.hpp"
#include "tunopt/rng.hpp"

namespace tunopt {

struct EquivalenceReport {
  std::string method;
  bool equivalent = false;
  double max_deviation = 0.0;
  std::optional<double> phase;  // global phase in radians, set when equivalent

  nlohmann::ordered_json to_json() const;
};

inline int circuit_qubits(const GateCircuit& c) { return c.n; }
inline int circuit_qubits(const PBCCircuit& p) { return p.n; }

/// Full 2^n x 2^n unitary. Guarded by max_qubits (memory blow-up), default 10.
Eigen::MatrixXcd dense_unitary(const GateCircuit& c, int max_qubits = 10);
Eigen::MatrixXcd dense_unitary(const PBCCircuit& p, int max_qubits = 10);

Eigen::VectorXcd apply_circuit(const GateCircuit& c, Eigen::VectorXcd state);
Eigen::VectorXcd apply_circuit(const PBCCircuit& p, Eigen::VectorXcd state);

/// Random product state: each qubit uniform on the Bloch sphere.
Eigen::VectorXcd random_product_state(int n, Rng& rng);

/// Compares two unitaries up to global phase; max_deviation is the largest
/// entrywise distance from the phase-aligned identity of V^dagger U.
EquivalenceReport check_equiv_dense_matrices(const Eigen::MatrixXcd& u,
                                             const Eigen::MatrixXcd& v, double tol);

template <typename U, typename V>
EquivalenceReport check_equiv_dense(const U& u, const V& v, double tol = 1e-9,
                                    int max_qubits = 10) {
  return check_equiv_dense_matrices(dense_unitary(u, max_qubits), dense_unitary(v, max_qubits),
                                    tol);
}

/// Probes both circuits on `states` seeded random product states;
/// max_deviation is 1 minus the worst-case fidelity between the images.
template <typename U, typename V>
EquivalenceReport check_equiv_statevector(const U& u, const V& v, double tol = 1e-9,
                                          int states = 20, std::uint64_t seed = 0x5eedULL) {
  const int n = circuit_qubits(u);
  if (circuit_qubits(v) != n) throw std::invalid_argument("qubit-count mismatch in check_equiv");
  EquivalenceReport report;
  report.method = "statevector";
  double min_fidelity = 1.0;
  std::optional<double> phase;
  for (int s = 0; s < states; ++s) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(s));
    const Eigen::VectorXcd probe = random_product_state(n, rng);
    const Eigen::VectorXcd iu = apply_circuit(u, probe);
    const Eigen::VectorXcd iv = apply_circuit(v, probe);
    const std::complex<double> inner = iv.dot(iu);
    min_fidelity = std::min(min_fidelity, std::norm(inner));
    if (!phase) phase = std::arg(inner);
  }
  report.max_deviation = 1.0 - min_fidelity;
  report.equivalent = report.max_deviation <= tol;
  if (report.equivalent) report.phase = phase;
  return report;
}

/// Dense comparison when both circuits fit under dense_cap, statevector
/// probing otherwise.
template <typename U, typename V>
EquivalenceReport check_equiv(const U& u, const V& v, double tol = 1e-9, int dense_cap = 10,
                              int states = 20, std::uint64_t seed = 0x5eedULL) {
  if (circuit_qubits(u) <= dense_cap && circuit_qubits(v) <= dense_cap)
    return check_equiv_dense(u, v, tol, dense_cap);
  return check_equiv_statevector(u, v, tol, states, seed);
}

}  // namespace tunopt
