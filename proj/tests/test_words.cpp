// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "christoffel/continuants.hpp"
#include "christoffel/words.hpp"
#include "oracles.hpp"

using namespace christoffel;

namespace {

const OstrowskiSystem kExample{2, 1, 3};

DigitString ds(std::vector<Integer> digits) { return DigitString(kExample, std::move(digits)); }
BinaryWord w(const char* s) { return BinaryWord(s); }

}  // namespace

TEST_SUITE("words") {

TEST_CASE("binary words") {
  CHECK_THROWS_AS(BinaryWord("abc"), std::invalid_argument);
  CHECK(w("aab").reversed() == w("baa"));
  CHECK(w("ab").power(3) == w("ababab"));
  CHECK(w("aab").swapped() == w("bba"));
  CHECK(w("aba").is_palindrome());
  CHECK(BinaryWord().is_palindrome());
  CHECK(w("ab").is_prefix_of(w("aba")));
  CHECK(w("ba").is_suffix_of(w("aba")));
  CHECK(w("b") < w("aa"));
  CHECK(w("ab") < w("ba"));
}

TEST_CASE("rotate") {
  CHECK(rotate(w("abaabaabaab"), 0) == w("abaabaabaab"));
  CHECK(rotate(w("abaabaabaab"), 1) == w("baabaabaaba"));
  CHECK(rotate(w("aba"), 5) == w("aab"));
  CHECK(rotate(w("aba"), -1) == w("aab"));
  CHECK(rotate(BinaryWord(), 3).empty());
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(w("aab")));
  CHECK_FALSE(is_primitive(w("abab")));
  CHECK_FALSE(is_primitive(BinaryWord()));
  CHECK(primitive_root(w("abababab")) == w("ab"));
  CHECK(primitive_root(w("aab")) == w("aab"));
}

TEST_CASE("morphisms") {
  CHECK(apply_morphism(pi_morphism(1, 0), w("a")) == w("ab"));
  AbelianMatrix p3 = AbelianMatrix::continuant_step(3);
  CHECK(abelianization(pi_morphism(2, 1)) == p3);
  CHECK(apply_morphism(exchange_morphism(), w("aab")) == w("bba"));
  CHECK(apply_morphism(g_morphism(), w("ab")) == w("aab"));
  CHECK(apply_morphism(g_tilde_morphism(), w("ab")) == w("aba"));
  CHECK(apply_morphism(d_morphism(), w("ab")) == w("bab"));
  CHECK(apply_morphism(d_tilde_morphism(), w("ab")) == w("abb"));
  const Morphism ge = compose(g_morphism(), exchange_morphism());
  CHECK(ge(w("ab")) == w("aba"));
  CHECK(abelianization(compose(pi_morphism(2, 0), pi_morphism(1, 1))) ==
        abelianization(pi_morphism(2, 0)) * abelianization(pi_morphism(1, 1)));
}

TEST_CASE("pi morphisms compose to the standard word") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    Morphism chain{w("a"), w("b")};
    AbelianMatrix product = AbelianMatrix::continuant_step(0) * AbelianMatrix::continuant_step(0);
    for (std::size_t i = 1; i <= sys.size(); ++i) {
      const std::size_t b = to_size(sys.bound(i));
      chain = compose(chain, pi_morphism(b, 0));
      product = product * AbelianMatrix::continuant_step(Integer(b));
    }
    CHECK(chain(w("a")) == m_word(sys));
    CHECK(abelianization(chain) == product);
  }
}

TEST_CASE("pi(i,j) abelianizes to P(i+j)") {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(abelianization(pi_morphism(i, j)) == AbelianMatrix::continuant_step(Integer(i + j)));
    }
  }
}

TEST_CASE("v_word") {
  CHECK(v_word(ds({0, 0, 0})) == w("abaabaabaab"));
  CHECK(v_word(ds({0, 1, 0})) == w("aabaabaabab"));
  CHECK(v_word(ds({1, 0, 3})).front() == 'b');
  CHECK(v_word(ds({1, 0, 3})).str() == oracle::v_word({2, 1, 3}, {1, 0, 3}));
  CHECK_THROWS_AS(v_word(ds({2, 0, 0})), std::invalid_argument);
  const VSequence v(ds({1, 0, 2}));
  CHECK(v.at(-1) == w("b"));
  CHECK(v.at(0) == w("a"));
  CHECK(v.size() == 3);
}

TEST_CASE("m_word, h_word, central_word, l_word") {
  CHECK(m_word(kExample) == w("abaabaabaab"));
  CHECK(m_word(kExample, 0) == w("a"));
  CHECK(m_word(kExample, 2) == w("aba"));
  CHECK(h_word(kExample, 0) == w("abaabaabaab"));
  CHECK(h_word(kExample, 11) == w("abaabaabaab"));
  CHECK(central_word(kExample) == w("abaabaaba"));
  CHECK(central_word(OstrowskiSystem{2}).empty());
  CHECK(central_word(OstrowskiSystem{2, 1}) == w("a"));
  CHECK_THROWS_AS(central_word(OstrowskiSystem{1}), std::domain_error);
  CHECK(l_word(kExample, 0) == w("a"));
  CHECK(l_word(kExample, 1) == w("ba"));
  CHECK(l_word(kExample, 2) == w("aba"));
}

TEST_CASE("V-words are the rotations of the standard word") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    const BinaryWord m = m_word(sys);
    CHECK(m.size() == sys.denominator(static_cast<int>(sys.size())));
    CHECK(Integer(m.count_a()) == oracle::denominators(alphas).back() - continuant(std::span<const Integer>(alphas).subspan(1)));
    oracle::for_each_legal(alphas, [&](const std::vector<Integer>& d) {
      const DigitString digits(sys, d);
      const BinaryWord v = v_word(digits);
      CHECK(v.str() == oracle::v_word(alphas, d));
      CHECK(v == rotate(m, value(digits)));
    });
  }
}

TEST_CASE("standard words end in ab for odd m and ba for even m") {
  for (const auto& alphas : oracle::systems(1, 5, 3)) {
    const OstrowskiSystem sys(alphas);
    const BinaryWord m = m_word(sys);
    if (m.size() < 2) continue;
    const BinaryWord p = central_word(sys);
    CHECK(p.is_palindrome());
    CHECK(m == p + (sys.size() % 2 == 1 ? w("ab") : w("ba")));
    CHECK(oracle::is_christoffel_class(m.str()));
  }
}

TEST_CASE("is_christoffel") {
  CHECK(is_christoffel(ds({0, 1, 0})) == ChristoffelKind::lower);
  CHECK(is_christoffel(ds({1, 0, 3})) == ChristoffelKind::upper);
  CHECK(is_christoffel(ds({0, 0, 0})) == ChristoffelKind::none);
  CHECK(is_christoffel(DigitString(OstrowskiSystem{1}, {0})) == ChristoffelKind::lower_and_upper);
  CHECK(to_string(ChristoffelKind::lower) == "lower Christoffel");
  CHECK_THROWS_AS(is_christoffel(ds({1, 1, 0})), std::invalid_argument);
}

TEST_CASE("Christoffel classification matches the discretized segment") {
  for (const auto& alphas : oracle::systems(1, 4, 4)) {
    const OstrowskiSystem sys(alphas);
    const BinaryWord m = m_word(sys);
    const std::string lower = oracle::lower_christoffel(m.count_a(), m.count_b());
    const std::string upper = oracle::reversed(lower);
    for (Integer n = 0; n <= sys.greedy_max(); ++n) {
      const DigitString g = greedy(sys, n);
      const std::string v = v_word(g).str();
      const ChristoffelKind kind = is_christoffel(g);
      const bool is_lower = kind == ChristoffelKind::lower || kind == ChristoffelKind::lower_and_upper;
      const bool is_upper = kind == ChristoffelKind::upper || kind == ChristoffelKind::lower_and_upper;
      CHECK(is_lower == (v == lower));
      CHECK(is_upper == (v == upper));
      CHECK((kind != ChristoffelKind::none) == is_alternating(g));
    }
  }
}

TEST_CASE("is_christoffel_conjugate") {
  CHECK(is_christoffel_conjugate(w("aabaabaabab")));
  CHECK_FALSE(is_christoffel_conjugate(w("aa")));
  CHECK_FALSE(is_christoffel_conjugate(w("abab")));
  CHECK(is_christoffel_conjugate(w("b")));
  CHECK_THROWS_AS(is_christoffel_conjugate(BinaryWord()), std::invalid_argument);
  // Every binary word up to length 12 against the discretization oracle.
  for (std::size_t len = 1; len <= 12; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s += (bits >> i) & 1U ? 'b' : 'a';
      CHECK(is_christoffel_conjugate(BinaryWord(s)) == oracle::is_christoffel_class(s));
    }
  }
}

TEST_CASE("frid_prefix") {
  CHECK(frid_prefix(ds({0, 0, 1})) == w("aba"));
  CHECK(frid_prefix(ds({1, 1, 0})) == w("aba"));
  CHECK(frid_prefix(ds({0, 0, 0})).empty());
  CHECK_THROWS_AS(frid_prefix(ds({1, 0, 3})), std::out_of_range);
}

TEST_CASE("frid_prefix does not depend on the representation") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    const BinaryWord m = m_word(sys);
    if (m.size() < 2) continue;
    const BinaryWord p = central_word(sys);
    oracle::for_each_legal(alphas, [&](const std::vector<Integer>& d) {
      const DigitString digits(sys, d);
      const Integer n = value(digits);
      if (n > sys.greedy_max() - 1) return;
      CHECK(frid_prefix(digits) == p.prefix(to_size(n)));
    });
  }
}

TEST_CASE("suffix_factorization") {
  auto s3 = suffix_factorization(kExample, 3);
  CHECK(s3.digits == ds({1, 1, 0}));
  CHECK(s3.word == w("aba"));
  auto s9 = suffix_factorization(kExample, 9);
  CHECK(s9.digits == ds({1, 1, 2}));
  CHECK(s9.word == w("abaabaaba"));
  auto s0 = suffix_factorization(kExample, 0);
  CHECK(s0.digits == ds({0, 0, 0}));
  CHECK(s0.word.empty());
  CHECK_THROWS_AS(suffix_factorization(kExample, 10), std::out_of_range);
  const BinaryWord p = central_word(kExample);
  for (std::size_t n = 0; n <= p.size(); ++n) CHECK(suffix_factorization(kExample, n).word == p.suffix(n));
}

TEST_CASE("palindromic products of standard words") {
  for (const auto& alphas : oracle::systems(2, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    const auto c = sys.central_exponents();
    for (std::size_t i = 1; i <= sys.size(); ++i) {
      for (Integer top = 0; top <= c[i - 1]; ++top) {
        BinaryWord u = m_word(sys, i - 1).power(top);
        for (std::size_t j = i - 1; j >= 1; --j) u += m_word(sys, j - 1).power(c[j - 1]);
        CHECK(u.is_palindrome());
      }
    }
  }
}

TEST_CASE("mirror identity") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    oracle::for_each_legal(alphas, [&](const std::vector<Integer>& d) {
      const DigitString digits(sys, d);
      CHECK(v_word(digits).reversed() == v_word(complement(digits)));
    });
  }
}

TEST_CASE("palindromes in a conjugation class") {
  // One palindrome exactly for odd length; all-even bounds suffice but are
  // not needed, as (2,1) shows with b = (1,1) and the palindrome aba.
  for (const auto& alphas : oracle::systems(1, 4, 4)) {
    const OstrowskiSystem sys(alphas);
    const BinaryWord m = m_word(sys);
    std::size_t palindromes = 0;
    for (std::size_t n = 0; n < m.size(); ++n) palindromes += oracle::is_palindrome(oracle::rotation(m.str(), n)) ? 1 : 0;
    CHECK(palindromes <= 1);
    CHECK((palindromes == 1) == (m.size() % 2 == 1));
  }
  CHECK(h_word(OstrowskiSystem{2, 1}, 0) == w("aba"));
}

TEST_CASE("pal and directive words") {
  CHECK(pal(BinaryWord()).empty());
  CHECK(pal(w("ab")) == w("aba"));
  CHECK(pal(w("abaa")) == w("abaabaaba"));
  CHECK(pal_closure(w("ab")) == w("aba"));
  CHECK(pal_closure(w("aab")) == w("aabaa"));
  CHECK(directive_word(kExample) == w("abaa"));
  CHECK(directive_word(OstrowskiSystem{2, 1}) == w("a"));
  CHECK(directive_word(OstrowskiSystem{1, 2}) == w("b"));
  CHECK_THROWS_AS(directive_word(OstrowskiSystem{3}), std::domain_error);
  for (const auto& alphas : oracle::systems(2, 5, 3)) {
    const OstrowskiSystem sys(alphas);
    CHECK(pal(directive_word(sys)) == central_word(sys));
  }
}

TEST_CASE("directive word matches the Stern-Brocot path of the slope") {
  for (const auto& alphas : oracle::systems(2, 4, 4)) {
    const OstrowskiSystem sys(alphas);
    const auto s = slope(m_word(sys));
    REQUIRE(s.has_value());
    CHECK(directive_word(sys).str() == oracle::mediant_path(*s));
  }
}

TEST_CASE("slopes") {
  CHECK(b_density(w("abaabaabaab")) == Rational(4, 11));
  CHECK(*slope(w("abaabaabaab")) == Rational(4, 7));
  CHECK_FALSE(slope(w("b")).has_value());
  CHECK(b_density(w("b")) == 1);
  CHECK(*slope(w("a")) == 0);
  CHECK(b_density(w("a")) == 0);
  CHECK(density_from_slope(std::nullopt) == 1);
  CHECK(density_from_slope(Rational(4, 7)) == Rational(4, 11));
  CHECK(*slope_from_density(Rational(4, 11)) == Rational(4, 7));
  CHECK_FALSE(slope_from_density(Rational(1)).has_value());
  CHECK_THROWS_AS(slope(BinaryWord()), std::domain_error);
  for (const auto& alphas : oracle::systems(1, 4, 4)) {
    std::vector<Integer> with_zero{0};
    with_zero.insert(with_zero.end(), alphas.begin(), alphas.end());
    CHECK(b_density(m_word(OstrowskiSystem(alphas))) == cf_value(with_zero));
  }
}

TEST_CASE("normalize_a1") {
  const DigitString n = normalize_a1(DigitString(OstrowskiSystem{1, 2}, {0, 1}));
  CHECK(n.system() == OstrowskiSystem{3});
  CHECK(n.digits() == std::vector<Integer>{1});
  CHECK(v_word(DigitString(OstrowskiSystem{1, 2}, {0, 1})) == w("bab"));
  CHECK(exchange_morphism()(v_word(n)) == w("bab"));
  CHECK_THROWS_AS(normalize_a1(DigitString(OstrowskiSystem{2, 2}, {0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(normalize_a1(DigitString(OstrowskiSystem{1}, {0})), std::invalid_argument);
}

TEST_CASE("normalize_am") {
  const DigitString n0 = normalize_am(DigitString(OstrowskiSystem{2, 1}, {0, 0}));
  CHECK(n0.system() == OstrowskiSystem{3});
  CHECK(n0.digits() == std::vector<Integer>{1});
  const DigitString n1 = normalize_am(DigitString(OstrowskiSystem{2, 1}, {0, 1}));
  CHECK(n1.system() == OstrowskiSystem{3});
  CHECK(n1.digits() == std::vector<Integer>{0});
  CHECK(v_word(n1) == w("aab"));
  CHECK_THROWS_AS(normalize_am(DigitString(OstrowskiSystem{2, 2}, {0, 0})), std::invalid_argument);
}

TEST_CASE("reductions preserve the V-word") {
  for (const auto& alphas : oracle::systems(2, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    oracle::for_each_legal(alphas, [&](const std::vector<Integer>& d) {
      const DigitString digits(sys, d);
      if (alphas.front() == 1) CHECK(exchange_morphism()(v_word(normalize_a1(digits))) == v_word(digits));
      if (alphas.back() == 1) CHECK(v_word(normalize_am(digits)) == v_word(digits));
    });
  }
}

}
