// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "christoffel/arith.hpp"
#include "christoffel/binary_word.hpp"
#include "christoffel/ostrowski.hpp"

namespace christoffel {

// ---------------------------------------------------------------------------
// Conjugation

/// C^n(w): moves the first letter to the end n times. n is reduced modulo
/// |w|, so negative counts rotate to the right. The empty word is fixed.
BinaryWord rotate(const BinaryWord& w, const Integer& n);

/// True when w is not a proper power of a shorter word. The empty word is
/// not primitive.
bool is_primitive(const BinaryWord& w);

/// The shortest x with w = x^k.
BinaryWord primitive_root(const BinaryWord& w);

// ---------------------------------------------------------------------------
// Morphisms of {a,b}*

/// 2x2 matrix of letter counts: column j holds (|f(x_j)|_a, |f(x_j)|_b) for
/// the source letter x_j in {a, b}.
struct AbelianMatrix {
  std::array<std::array<Integer, 2>, 2> entries{};

  /// [[n, 1], [1, 0]]
  static AbelianMatrix continuant_step(const Integer& n);

  friend AbelianMatrix operator*(const AbelianMatrix& lhs, const AbelianMatrix& rhs);
  friend bool operator==(const AbelianMatrix&, const AbelianMatrix&) = default;
};

/// The endomorphism sending a to image_a and b to image_b.
struct Morphism {
  BinaryWord image_a;
  BinaryWord image_b;

  [[nodiscard]] BinaryWord operator()(const BinaryWord& w) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// (b, a)
Morphism exchange_morphism();
/// (a, ab)
Morphism g_morphism();
/// (a, ba)
Morphism g_tilde_morphism();
/// (ba, b)
Morphism d_morphism();
/// (ab, b)
Morphism d_tilde_morphism();
/// (a^i b a^j, a)
Morphism pi_morphism(std::size_t i, std::size_t j);

BinaryWord apply_morphism(const Morphism& f, const BinaryWord& w);
/// f after g: x -> f(g(x)).
Morphism compose(const Morphism& f, const Morphism& g);
AbelianMatrix abelianization(const Morphism& f);

// ---------------------------------------------------------------------------
// The V-recursion

/// The words V_{-1} = b, V_0 = a, V_i = V_{i-1}^{b_i - d_i} V_{i-2} V_{i-1}^{d_i}
/// for a legal digit string. V_i only depends on the first i digits.
class VSequence {
 public:
  /// Throws std::invalid_argument if ds is not legal; negative exponents
  /// need the free-group variant (v_group_word).
  explicit VSequence(const DigitString& ds);

  /// V_i for -1 <= i <= m.
  [[nodiscard]] const BinaryWord& at(int i) const;
  [[nodiscard]] const BinaryWord& last() const { return words_.back(); }
  [[nodiscard]] std::size_t size() const noexcept { return words_.size() - 2; }

 private:
  std::vector<BinaryWord> words_;  // V_{-1}, V_0, ..., V_m
};

BinaryWord v_word(const DigitString& ds);

/// M_m = V_m(0, ..., 0), the standard word of the class.
BinaryWord m_word(const OstrowskiSystem& sys);
/// M_i for 0 <= i <= m, computed on the prefix system a1..ai (M_0 = a).
BinaryWord m_word(const OstrowskiSystem& sys, std::size_t i);
/// H_N = C^N(M_m); any integer N, reduced modulo q_m.
BinaryWord h_word(const OstrowskiSystem& sys, const Integer& n);

/// The palindrome p with M_m = p ab or p ba. Throws std::domain_error when
/// q_m < 2.
BinaryWord central_word(const OstrowskiSystem& sys);

/// L_i = reversal of M_i, for 0 <= i <= m - 1.
BinaryWord l_word(const OstrowskiSystem& sys, std::size_t i);

enum class ChristoffelKind { none, lower, upper, lower_and_upper };
std::string to_string(ChristoffelKind kind);

/// Classifies V_m(ds) for a greedy ds: lower exactly for (0, b2, 0, b4, ...),
/// upper exactly for (b1, 0, b3, 0, ...). Only the one-letter word b of the
/// system (1) is both. Throws std::invalid_argument on non-greedy input.
ChristoffelKind is_christoffel(const DigitString& ds);

/// Membership oracle for the conjugates of Christoffel words that does not
/// use the V-recursion: w is primitive and has exactly |w| - 1 circular
/// factors of length |w| - 2. Single letters count as Christoffel words.
/// Throws std::invalid_argument on the empty word.
bool is_christoffel_conjugate(const BinaryWord& w);

/// M_{m-1}^{d_m} ... M_0^{d_1}, the prefix of length N of the central word.
/// Requires legal digits with N <= q_m - 2 (throws std::out_of_range).
BinaryWord frid_prefix(const DigitString& ds);

struct SuffixFactorization {
  DigitString digits;  // lazy representation of N
  BinaryWord word;     // L_0^{d1} L_1^{d2} ... L_{m-1}^{dm}
};

/// The suffix of length N of the central word, read as a product of the
/// reversed standard words. Throws std::out_of_range unless 0 <= N <= q_m - 2.
SuffixFactorization suffix_factorization(const OstrowskiSystem& sys, const Integer& n);

/// Shortest palindrome with prefix w.
BinaryWord pal_closure(const BinaryWord& w);
/// Iterated palindromic closure: Pal(ε) = ε, Pal(wx) = (Pal(w) x)^(+).
BinaryWord pal(const BinaryWord& v);

/// a^{c1} b^{c2} a^{c3} ... with alternating letters. Throws
/// std::domain_error for m = 1.
BinaryWord directive_word(const OstrowskiSystem& sys);

/// |w|_b / |w|_a, or nullopt (infinite) when w has no a. Throws
/// std::domain_error on the empty word.
std::optional<Rational> slope(const BinaryWord& w);
/// |w|_b / |w|, the b-density ("Slope" with a capital S).
Rational b_density(const BinaryWord& w);
/// S = s / (1 + s); an infinite slope maps to 1.
Rational density_from_slope(const std::optional<Rational>& s);
/// s = S / (1 - S); S = 1 maps to an infinite slope.
std::optional<Rational> slope_from_density(const Rational& density);

/// Reduction for a1 = 1: the system (a2 + 1, a3, ..., am) and digits
/// (d2, ..., dm), with V_m(d) = E(V'_{m-1}(d')). Requires m >= 2, a1 = 1 and
/// legal digits; throws std::invalid_argument otherwise.
DigitString normalize_a1(const DigitString& ds);

/// Reduction for am = 1: the system (a1, ..., a_{m-2}, a_{m-1} + 1) and digits
/// (d1, ..., d_{m-2}, d_{m-1} + 1) when dm = 0, (d1, ..., d_{m-1}) when
/// dm = 1, so that V_m(d) = V'_{m-1}(d'). Requires m >= 2, am = 1 and legal
/// digits; throws std::invalid_argument otherwise.
DigitString normalize_am(const DigitString& ds);

}  // namespace christoffel
