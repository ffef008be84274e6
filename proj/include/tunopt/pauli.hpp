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

#include <cstdint>
#include <functional>
#include <string>

#include "tunopt/rng.hpp"

namespace tunopt {

/// Unsigned n-qubit Pauli word in the symplectic (X-part, Z-part) encoding:
/// qubit q carries X iff x bit q is set, Z iff z bit q is set, Y iff both.
/// Qubit 0 is the leftmost letter in the text form. n is capped at 64 so the
/// parts fit one machine word each.
class PauliWord {
 public:
  PauliWord() = default;
  PauliWord(int n, std::uint64_t x, std::uint64_t z);

  static PauliWord identity(int n) { return PauliWord(n, 0, 0); }

  int num_qubits() const { return n_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// 'I', 'X', 'Y' or 'Z'.
  char letter(int q) const;
  void set_letter(int q, char letter);

  /// Number of non-identity letters.
  int weight() const;
  /// Number of Y letters; fixes the phase of the X/Z generator expansion.
  int y_count() const;

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// true iff the words commute (symplectic inner product is even). Signs never
/// affect commutation. Throws std::invalid_argument on qubit-count mismatch.
bool commutes(const PauliWord& a, const PauliWord& b);

/// Rotation axis: a signed, non-identity Pauli word. The sign is restricted
/// to +1/-1; genuinely imaginary phases never appear on axes.
struct PauliAxis {
  PauliWord word;
  int sign = 1;

  PauliAxis() = default;
  PauliAxis(PauliWord w, int s);

  PauliAxis operator-() const { return PauliAxis(word, -sign); }
  friend bool operator==(const PauliAxis&, const PauliAxis&) = default;
};

bool commutes(const PauliAxis& a, const PauliAxis& b);
inline bool anticommutes(const PauliAxis& a, const PauliAxis& b) { return !commutes(a, b); }

/// Pauli word together with a power of i: value = i^phase_exp * word. Closed
/// under multiplication; intermediate products of Hermitian words may pick up
/// imaginary phases even when the end result is Hermitian again.
struct PhasedPauli {
  PauliWord word;
  int phase_exp = 0;  // mod 4

  PhasedPauli() = default;
  explicit PhasedPauli(const PauliWord& w, int e = 0) : word(w), phase_exp(((e % 4) + 4) % 4) {}
  explicit PhasedPauli(const PauliAxis& a) : word(a.word), phase_exp(a.sign > 0 ? 0 : 2) {}

  bool is_hermitian() const { return phase_exp == 0 || phase_exp == 2; }
  /// Requires a real phase.
  PauliAxis to_axis() const;

  friend bool operator==(const PhasedPauli&, const PhasedPauli&) = default;
};

/// Product with exact phase tracking (letter-wise, e.g. X*Y = iZ).
PhasedPauli product(const PhasedPauli& a, const PhasedPauli& b);
PhasedPauli product(const PauliAxis& a, const PauliAxis& b);

/// The unique axis D = -A*B*C completing (A, B, C) to a valid quadruple,
/// given [A,B] = 0 and C anticommuting with both, all words distinct.
/// Throws std::invalid_argument naming the violated precondition otherwise.
PauliAxis minus_abc(const PauliAxis& a, const PauliAxis& b, const PauliAxis& c);

/// Uniform random axis (uniform non-identity word, independent sign),
/// filtered through `predicate` by rejection. Throws RetryCapError after
/// `cap` rejected draws.
PauliAxis sample_axis(int n, Rng& rng,
                      const std::function<bool(const PauliAxis&)>& predicate = {},
                      int cap = 10000);

/// Text form: sign character followed by one letter per qubit, e.g. "-XIZ".
std::string to_string(const PauliAxis& axis);
/// Accepts the same grammar; a missing sign is read as '+'.
PauliAxis parse_axis(const std::string& text);

}  // namespace tunopt
