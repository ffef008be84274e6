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

#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "oracle.hpp"
#include "tunopt/errors.hpp"
#include "tunopt/rng.hpp"

using namespace tunopt;

namespace {

// Every one- and two-qubit word, for exhaustive sweeps.
std::vector<PauliWord> all_words(int n) {
  std::vector<PauliWord> out;
  const std::uint64_t lim = std::uint64_t(1) << n;
  for (std::uint64_t x = 0; x < lim; ++x)
    for (std::uint64_t z = 0; z < lim; ++z) out.emplace_back(n, x, z);
  return out;
}

std::vector<PauliAxis> all_axes(int n) {
  std::vector<PauliAxis> out;
  for (const PauliWord& w : all_words(n)) {
    if (w.is_identity()) continue;
    out.emplace_back(w, 1);
    out.emplace_back(w, -1);
  }
  return out;
}

oracle::Mat dense_phased(const PhasedPauli& p) {
  static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return i_pow[p.phase_exp] * oracle::dense_word(p.word);
}

}  // namespace

TEST(pauli_word, letters_round_trip) {
  PauliWord w(4, 0, 0);
  w.set_letter(0, 'X');
  w.set_letter(1, 'Y');
  w.set_letter(2, 'Z');
  EXPECT_EQ(w.letter(0), 'X');
  EXPECT_EQ(w.letter(1), 'Y');
  EXPECT_EQ(w.letter(2), 'Z');
  EXPECT_EQ(w.letter(3), 'I');
  EXPECT_EQ(w.weight(), 3);
  EXPECT_EQ(w.y_count(), 1);

  w.set_letter(1, 'I');
  EXPECT_EQ(w.letter(1), 'I');
  EXPECT_EQ(w.weight(), 2);
  EXPECT_EQ(w.y_count(), 0);
}

TEST(pauli_word, qubit_zero_is_most_significant) {
  PauliWord w(2, 0, 0);
  w.set_letter(0, 'Z');
  // Z on qubit 0 of two qubits is diag(1, 1, -1, -1) in the dense basis.
  const oracle::Mat m = oracle::dense_word(w);
  EXPECT_DOUBLE_EQ(m(0, 0).real(), 1.0);
  EXPECT_DOUBLE_EQ(m(1, 1).real(), 1.0);
  EXPECT_DOUBLE_EQ(m(2, 2).real(), -1.0);
  EXPECT_DOUBLE_EQ(m(3, 3).real(), -1.0);
}

TEST(pauli_word, identity_and_bounds) {
  EXPECT_TRUE(PauliWord::identity(5).is_identity());
  EXPECT_EQ(PauliWord::identity(5).weight(), 0);
  EXPECT_THROW(PauliWord(0, 0, 0), std::invalid_argument);
  EXPECT_THROW(PauliWord(65, 0, 0), std::invalid_argument);
  EXPECT_THROW(PauliWord(2, 0b100, 0), std::invalid_argument);  // bit beyond n
  PauliWord w(2, 0, 0);
  EXPECT_THROW(w.set_letter(2, 'X'), std::out_of_range);
  EXPECT_THROW(w.set_letter(0, 'Q'), std::invalid_argument);
}

TEST(pauli_commutes, matches_dense_commutator_exhaustively) {
  for (int n = 1; n <= 2; ++n) {
    for (const PauliWord& a : all_words(n)) {
      for (const PauliWord& b : all_words(n)) {
        const oracle::Mat ma = oracle::dense_word(a);
        const oracle::Mat mb = oracle::dense_word(b);
        const double comm = (ma * mb - mb * ma).cwiseAbs().maxCoeff();
        EXPECT_EQ(commutes(a, b), comm < 1e-12)
            << "n=" << n << " a=(x" << a.x_bits() << ",z" << a.z_bits() << ") b=(x" << b.x_bits()
            << ",z" << b.z_bits() << ")";
      }
    }
  }
}

TEST(pauli_commutes, sign_never_matters) {
  const PauliAxis a = parse_axis("+XZ");
  const PauliAxis b = parse_axis("-ZX");
  EXPECT_EQ(commutes(a, b), commutes(-a, b));
  EXPECT_EQ(commutes(a, b), commutes(a, -b));
  EXPECT_THROW(commutes(parse_axis("X"), parse_axis("XX")), std::invalid_argument);
}

TEST(pauli_product, single_letter_table) {
  // X*Y = iZ, Y*X = -iZ, Z*X = iY, and squares are the identity.
  const PhasedPauli x(parse_axis("X").word);
  const PhasedPauli y(parse_axis("Y").word);
  const PhasedPauli z(parse_axis("Z").word);

  PhasedPauli xy = product(x, y);
  EXPECT_EQ(xy.word.letter(0), 'Z');
  EXPECT_EQ(xy.phase_exp, 1);

  PhasedPauli yx = product(y, x);
  EXPECT_EQ(yx.word.letter(0), 'Z');
  EXPECT_EQ(yx.phase_exp, 3);

  PhasedPauli zx = product(z, x);
  EXPECT_EQ(zx.word.letter(0), 'Y');
  EXPECT_EQ(zx.phase_exp, 1);

  PhasedPauli xx = product(x, x);
  EXPECT_TRUE(xx.word.is_identity());
  EXPECT_EQ(xx.phase_exp, 0);
}

TEST(pauli_product, matches_dense_exhaustively) {
  for (int n = 1; n <= 2; ++n) {
    for (const PauliWord& a : all_words(n)) {
      for (const PauliWord& b : all_words(n)) {
        const PhasedPauli p = product(PhasedPauli(a), PhasedPauli(b));
        const oracle::Mat expect = oracle::dense_word(a) * oracle::dense_word(b);
        EXPECT_LT(oracle::exact_deviation(dense_phased(p), expect), 1e-12);
      }
    }
  }
}

TEST(pauli_product, phases_compose) {
  const PhasedPauli a(parse_axis("XY").word, 3);
  const PhasedPauli b(parse_axis("YX").word, 2);
  const PhasedPauli p = product(a, b);
  EXPECT_LT(oracle::exact_deviation(dense_phased(p), dense_phased(a) * dense_phased(b)), 1e-12);
}

TEST(pauli_product, axis_overload_is_hermitian_aware) {
  // Commuting Hermitian axes multiply to a Hermitian result.
  const PhasedPauli p = product(parse_axis("-XX"), parse_axis("+YY"));
  EXPECT_TRUE(p.is_hermitian());
  const PauliAxis axis = p.to_axis();
  EXPECT_EQ(to_string(axis), "+ZZ");

  // Anticommuting product picks up a genuine i and cannot become an axis.
  const PhasedPauli q = product(parse_axis("+X"), parse_axis("+Y"));
  EXPECT_FALSE(q.is_hermitian());
  EXPECT_THROW(q.to_axis(), std::logic_error);
}

TEST(pauli_axis, rejects_identity_and_bad_sign) {
  EXPECT_THROW(PauliAxis(PauliWord::identity(2), 1), std::invalid_argument);
  EXPECT_THROW(PauliAxis(parse_axis("X").word, 0), std::invalid_argument);
  EXPECT_THROW(PauliAxis(parse_axis("X").word, 2), std::invalid_argument);
}

TEST(pauli_text, parse_render_round_trip) {
  for (const std::string& s : {"+XIZ", "-YYX", "+Z", "-IIIX"}) {
    EXPECT_EQ(to_string(parse_axis(s)), s);
  }
  EXPECT_EQ(to_string(parse_axis("XZ")), "+XZ");  // sign optional on input
  EXPECT_THROW(parse_axis(""), ParseError);
  EXPECT_THROW(parse_axis("+"), ParseError);
  EXPECT_THROW(parse_axis("+II"), ParseError);   // identity is not an axis
  EXPECT_THROW(parse_axis("+AB"), ParseError);   // bad letter
  EXPECT_THROW(parse_axis("*XZ"), ParseError);   // bad sign
}

TEST(pauli_minus_abc, frozen_examples) {
  // (A, B) commuting, C anticommuting with both: D = -A*B*C.
  EXPECT_EQ(to_string(minus_abc(parse_axis("+XY"), parse_axis("+YX"), parse_axis("+XX"))), "+YY");
  EXPECT_EQ(to_string(minus_abc(parse_axis("-XY"), parse_axis("-YX"), parse_axis("+IZ"))), "-ZI");
  EXPECT_EQ(to_string(minus_abc(parse_axis("+XI"), parse_axis("+IX"), parse_axis("+ZZ"))), "+YY");
}

TEST(pauli_minus_abc, matches_dense_product) {
  // D = -A*B*C as matrices, checked over an exhaustive two-qubit sweep of
  // valid triples (sampling both signs).
  int checked = 0;
  const auto axes = all_axes(2);
  for (const PauliAxis& a : axes) {
    for (const PauliAxis& b : axes) {
      if (a.word == b.word || !commutes(a, b)) continue;
      for (const PauliAxis& c : axes) {
        if (c.word == a.word || c.word == b.word) continue;
        if (commutes(c, a) || commutes(c, b)) continue;
        if (c.sign != 1 || a.sign * b.sign != 1) continue;  // keep the sweep small
        const PauliAxis d = minus_abc(a, b, c);
        const oracle::Mat expect =
            -oracle::dense_axis(a) * oracle::dense_axis(b) * oracle::dense_axis(c);
        EXPECT_LT(oracle::exact_deviation(oracle::dense_axis(d), expect), 1e-12);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(pauli_minus_abc, rejects_bad_preconditions) {
  const PauliAxis a = parse_axis("+XY");
  const PauliAxis b = parse_axis("+YX");
  const PauliAxis c = parse_axis("+XX");
  EXPECT_THROW(minus_abc(a, a, c), std::invalid_argument);                    // repeated word
  EXPECT_THROW(minus_abc(a, parse_axis("+XX"), c), std::invalid_argument);    // [A,B] != 0
  EXPECT_THROW(minus_abc(a, b, parse_axis("+ZZ")), std::invalid_argument);    // [C,A] = 0
}

TEST(pauli_sample_axis, uniform_support_and_determinism) {
  Rng rng(42);
  std::set<std::string> seen;
  for (int i = 0; i < 2000; ++i) {
    const PauliAxis a = sample_axis(2, rng);
    EXPECT_EQ(a.word.num_qubits(), 2);
    EXPECT_FALSE(a.word.is_identity());
    seen.insert(to_string(a));
  }
  // 15 non-identity words times 2 signs.
  EXPECT_EQ(seen.size(), 30u);

  Rng r1(7), r2(7);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(to_string(sample_axis(3, r1)), to_string(sample_axis(3, r2)));
}

TEST(pauli_sample_axis, predicate_filter_and_cap) {
  Rng rng(1);
  const PauliAxis target = parse_axis("+ZZ");
  for (int i = 0; i < 100; ++i) {
    const PauliAxis a =
        sample_axis(2, rng, [&](const PauliAxis& p) { return anticommutes(p, target); });
    EXPECT_TRUE(anticommutes(a, target));
  }
  EXPECT_THROW(sample_axis(2, rng, [](const PauliAxis&) { return false; }, 50), RetryCapError);
}

TEST(pauli_axis, dense_is_hermitian_and_involutory) {
  for (const PauliAxis& a : all_axes(2)) {
    const oracle::Mat m = oracle::dense_axis(a);
    EXPECT_LT(oracle::exact_deviation(m, m.adjoint()), 1e-12);
    EXPECT_LT(oracle::exact_deviation(m * m, oracle::Mat::Identity(4, 4)), 1e-12);
  }
}
