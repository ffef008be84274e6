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

#include "tunopt/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "tunopt/errors.hpp"

namespace tunopt {

namespace {

std::uint64_t qubit_mask(int n) {
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

// Letter codes: I=0, X=1, Z=2, Y=3 (code = x + 2z).
inline int letter_code(const PauliWord& w, int q) {
  return static_cast<int>((w.x_bits() >> q) & 1) | (static_cast<int>((w.z_bits() >> q) & 1) << 1);
}

// phase_step[a][b]: exponent of i contributed by multiplying letter a by
// letter b, e.g. X*Y = iZ (+1), Y*X = -iZ (+3). Identical or identity
// letters contribute nothing.
constexpr int kPhaseStep[4][4] = {
    // I  X  Z  Y
    {0, 0, 0, 0},  // I
    {0, 0, 3, 1},  // X
    {0, 1, 0, 3},  // Z
    {0, 3, 1, 0},  // Y
};

}  // namespace

PauliWord::PauliWord(int n, std::uint64_t x, std::uint64_t z) : n_(n), x_(x), z_(z) {
  if (n < 1 || n > 64) throw std::invalid_argument("qubit count must be in [1, 64]");
  if ((x & ~qubit_mask(n)) != 0 || (z & ~qubit_mask(n)) != 0)
    throw std::invalid_argument("Pauli word bits outside qubit range");
}

char PauliWord::letter(int q) const {
  if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
  constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[letter_code(*this, q)];
}

void PauliWord::set_letter(int q, char letter) {
  if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
  const std::uint64_t bit = 1ULL << q;
  x_ &= ~bit;
  z_ &= ~bit;
  switch (letter) {
    case 'I': break;
    case 'X': x_ |= bit; break;
    case 'Z': z_ |= bit; break;
    case 'Y': x_ |= bit; z_ |= bit; break;
    default: throw std::invalid_argument("invalid Pauli letter");
  }
}

int PauliWord::weight() const { return std::popcount(x_ | z_); }

int PauliWord::y_count() const { return std::popcount(x_ & z_); }

bool commutes(const PauliWord& a, const PauliWord& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("qubit-count mismatch in commutation test");
  const int parity = std::popcount(a.x_bits() & b.z_bits()) + std::popcount(a.z_bits() & b.x_bits());
  return (parity & 1) == 0;
}

PauliAxis::PauliAxis(PauliWord w, int s) : word(std::move(w)), sign(s) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("axis sign must be +1 or -1");
  if (word.is_identity()) throw std::invalid_argument("axis word must not be the identity");
}

bool commutes(const PauliAxis& a, const PauliAxis& b) { return commutes(a.word, b.word); }

PauliAxis PhasedPauli::to_axis() const {
  if (!is_hermitian()) throw std::logic_error("phase is imaginary; not an axis");
  return PauliAxis(word, phase_exp == 0 ? 1 : -1);
}

PhasedPauli product(const PhasedPauli& a, const PhasedPauli& b) {
  if (a.word.num_qubits() != b.word.num_qubits())
    throw std::invalid_argument("qubit-count mismatch in Pauli product");
  int e = a.phase_exp + b.phase_exp;
  std::uint64_t both = (a.word.x_bits() | a.word.z_bits()) & (b.word.x_bits() | b.word.z_bits());
  while (both != 0) {
    const int q = std::countr_zero(both);
    both &= both - 1;
    e += kPhaseStep[letter_code(a.word, q)][letter_code(b.word, q)];
  }
  const PauliWord w(a.word.num_qubits(), a.word.x_bits() ^ b.word.x_bits(),
                    a.word.z_bits() ^ b.word.z_bits());
  return PhasedPauli(w, e);
}

PhasedPauli product(const PauliAxis& a, const PauliAxis& b) {
  return product(PhasedPauli(a), PhasedPauli(b));
}

PauliAxis minus_abc(const PauliAxis& a, const PauliAxis& b, const PauliAxis& c) {
  if (a.word == b.word || a.word == c.word || b.word == c.word)
    throw std::invalid_argument("minus_abc: words must be pairwise distinct");
  if (!commutes(a, b)) throw std::invalid_argument("minus_abc: A and B must commute");
  if (commutes(a, c)) throw std::invalid_argument("minus_abc: C must anticommute with A");
  if (commutes(b, c)) throw std::invalid_argument("minus_abc: C must anticommute with B");
  PhasedPauli abc = product(product(PhasedPauli(a), PhasedPauli(b)), PhasedPauli(c));
  abc.phase_exp = (abc.phase_exp + 2) % 4;  // multiply by -1
  if (!abc.is_hermitian()) throw std::logic_error("minus_abc: product phase is imaginary");
  if (abc.word.is_identity()) throw std::logic_error("minus_abc: product word is the identity");
  return abc.to_axis();
}

PauliAxis sample_axis(int n, Rng& rng, const std::function<bool(const PauliAxis&)>& predicate,
                      int cap) {
  if (n < 1 || n > 64) throw std::invalid_argument("qubit count must be in [1, 64]");
  const std::uint64_t mask = qubit_mask(n);
  for (int attempt = 0; attempt < cap; ++attempt) {
    const std::uint64_t x = rng.next_u64() & mask;
    const std::uint64_t z = rng.next_u64() & mask;
    if (x == 0 && z == 0) continue;
    const PauliAxis axis(PauliWord(n, x, z), rng.next_bit() ? -1 : 1);
    if (!predicate || predicate(axis)) return axis;
  }
  throw RetryCapError("sample_axis: retry cap exhausted");
}

std::string to_string(const PauliAxis& axis) {
  std::string out;
  out.reserve(static_cast<size_t>(axis.word.num_qubits()) + 1);
  out.push_back(axis.sign > 0 ? '+' : '-');
  for (int q = 0; q < axis.word.num_qubits(); ++q) out.push_back(axis.word.letter(q));
  return out;
}

PauliAxis parse_axis(const std::string& text) {
  size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '+' ? 1 : -1;
    ++pos;
  }
  const size_t letters = text.size() - pos;
  if (letters == 0) throw ParseError("empty Pauli axis");
  if (letters > 64) throw ParseError("Pauli axis longer than 64 qubits");
  PauliWord word = PauliWord::identity(static_cast<int>(letters));
  for (int q = 0; pos < text.size(); ++pos, ++q) {
    const char ch = text[pos];
    if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z')
      throw ParseError(std::string("invalid Pauli letter '") + ch + "'");
    word.set_letter(q, ch);
  }
  if (word.is_identity()) throw ParseError("axis word must not be the identity");
  return PauliAxis(word, sign);
}

}  // namespace tunopt
