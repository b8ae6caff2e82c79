// SPDX-License-Identifier: Apache-2.0

#include "christoffel/words.hpp"

#include <set>
#include <stdexcept>
#include <string_view>

namespace christoffel {

BinaryWord rotate(const BinaryWord& w, const Integer& n) {
  if (w.empty()) return w;
  const Integer len = w.size();
  Integer r = n % len;
  if (r < 0) r += len;
  const std::size_t k = to_size(r);
  return w.suffix(w.size() - k) + w.prefix(k);
}

namespace {

// Smallest p > 0 with C^p(w) = w; always divides |w|.
std::size_t rotation_order(const BinaryWord& w) {
  const std::string doubled = w.str() + w.str();
  return doubled.find(w.str(), 1);
}

}  // namespace

bool is_primitive(const BinaryWord& w) { return !w.empty() && rotation_order(w) == w.size(); }

BinaryWord primitive_root(const BinaryWord& w) {
  if (w.empty()) return w;
  return w.prefix(rotation_order(w));
}

AbelianMatrix AbelianMatrix::continuant_step(const Integer& n) {
  AbelianMatrix p;
  p.entries = {{{n, Integer(1)}, {Integer(1), Integer(0)}}};
  return p;
}

AbelianMatrix operator*(const AbelianMatrix& lhs, const AbelianMatrix& rhs) {
  AbelianMatrix out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out.entries[i][j] = lhs.entries[i][0] * rhs.entries[0][j] + lhs.entries[i][1] * rhs.entries[1][j];
    }
  }
  return out;
}

BinaryWord Morphism::operator()(const BinaryWord& w) const {
  std::string out;
  out.reserve(w.count_a() * image_a.size() + w.count_b() * image_b.size());
  for (char x : w.view()) out += (x == 'a' ? image_a : image_b).str();
  return BinaryWord(std::move(out));
}

Morphism exchange_morphism() { return {BinaryWord("b"), BinaryWord("a")}; }
Morphism g_morphism() { return {BinaryWord("a"), BinaryWord("ab")}; }
Morphism g_tilde_morphism() { return {BinaryWord("a"), BinaryWord("ba")}; }
Morphism d_morphism() { return {BinaryWord("ba"), BinaryWord("b")}; }
Morphism d_tilde_morphism() { return {BinaryWord("ab"), BinaryWord("b")}; }

Morphism pi_morphism(std::size_t i, std::size_t j) {
  const BinaryWord a("a");
  return {a.power(i) + BinaryWord("b") + a.power(j), a};
}

BinaryWord apply_morphism(const Morphism& f, const BinaryWord& w) { return f(w); }

Morphism compose(const Morphism& f, const Morphism& g) { return {f(g.image_a), f(g.image_b)}; }

AbelianMatrix abelianization(const Morphism& f) {
  AbelianMatrix m;
  m.entries = {{{Integer(f.image_a.count_a()), Integer(f.image_b.count_a())},
                {Integer(f.image_a.count_b()), Integer(f.image_b.count_b())}}};
  return m;
}

VSequence::VSequence(const DigitString& ds) {
  if (!is_legal(ds)) {
    throw std::invalid_argument("V-recursion over words needs legal digits " + to_string(ds) +
                                "; use v_group_word for unrestricted digits");
  }
  const OstrowskiSystem& sys = ds.system();
  words_.reserve(ds.size() + 2);
  words_.emplace_back("b");
  words_.emplace_back("a");
  for (std::size_t i = 1; i <= ds.size(); ++i) {
    const BinaryWord& prev = words_[i];
    const BinaryWord& before = words_[i - 1];
    words_.push_back(prev.power(sys.bound(i) - ds.digit(i)) + before + prev.power(ds.digit(i)));
  }
}

const BinaryWord& VSequence::at(int i) const {
  if (i < -1 || i > static_cast<int>(size())) throw std::out_of_range("V index out of range");
  return words_[static_cast<std::size_t>(i + 1)];
}

BinaryWord v_word(const DigitString& ds) { return VSequence(ds).last(); }

BinaryWord m_word(const OstrowskiSystem& sys) { return v_word(DigitString::zeros(sys)); }

BinaryWord m_word(const OstrowskiSystem& sys, std::size_t i) {
  if (i > sys.size()) throw std::out_of_range("standard word index out of range");
  return VSequence(DigitString::zeros(sys)).at(static_cast<int>(i));
}

BinaryWord h_word(const OstrowskiSystem& sys, const Integer& n) { return rotate(m_word(sys), n); }

BinaryWord central_word(const OstrowskiSystem& sys) {
  const BinaryWord m = m_word(sys);
  if (m.size() < 2) throw std::domain_error("a word of length " + std::to_string(m.size()) + " has no central word");
  return m.prefix(m.size() - 2);
}

BinaryWord l_word(const OstrowskiSystem& sys, std::size_t i) {
  if (i >= sys.size()) throw std::out_of_range("L index must be below m");
  return m_word(sys, i).reversed();
}

std::string to_string(ChristoffelKind kind) {
  switch (kind) {
    case ChristoffelKind::none: return "not Christoffel";
    case ChristoffelKind::lower: return "lower Christoffel";
    case ChristoffelKind::upper: return "upper Christoffel";
    case ChristoffelKind::lower_and_upper: return "lower and upper Christoffel";
  }
  return "?";
}

ChristoffelKind is_christoffel(const DigitString& ds) {
  if (!is_greedy(ds)) throw std::invalid_argument("Christoffel classification needs greedy digits");
  const OstrowskiSystem& sys = ds.system();
  bool lower = true;
  bool upper = true;
  for (std::size_t i = 1; i <= ds.size(); ++i) {
    const bool odd = (i % 2) == 1;
    lower = lower && ds.digit(i) == (odd ? Integer(0) : sys.bound(i));
    upper = upper && ds.digit(i) == (odd ? sys.bound(i) : Integer(0));
  }
  if (lower && upper) return ChristoffelKind::lower_and_upper;
  if (lower) return ChristoffelKind::lower;
  if (upper) return ChristoffelKind::upper;
  return ChristoffelKind::none;
}

bool is_christoffel_conjugate(const BinaryWord& w) {
  if (w.empty()) throw std::invalid_argument("the empty word is not a conjugate of a Christoffel word");
  if (w.size() == 1) return true;
  if (!is_primitive(w)) return false;
  const std::size_t n = w.size();
  const std::string doubled = w.str() + w.str();
  std::set<std::string_view> factors;
  for (std::size_t i = 0; i < n; ++i) factors.insert(std::string_view(doubled).substr(i, n - 2));
  return factors.size() == n - 1;
}

BinaryWord frid_prefix(const DigitString& ds) {
  if (!is_legal(ds)) throw std::invalid_argument("prefix factorization needs legal digits");
  const OstrowskiSystem& sys = ds.system();
  const Integer n = value(ds);
  if (n > sys.denominator(static_cast<int>(sys.size())) - 2) {
    throw std::out_of_range("prefix length " + n.str() + " exceeds the central word");
  }
  const VSequence standard(DigitString::zeros(sys));
  BinaryWord out;
  for (std::size_t i = ds.size(); i >= 1; --i) out += standard.at(static_cast<int>(i) - 1).power(ds.digit(i));
  return out;
}

SuffixFactorization suffix_factorization(const OstrowskiSystem& sys, const Integer& n) {
  const Integer longest = sys.denominator(static_cast<int>(sys.size())) - 2;
  if (n < 0 || n > longest) {
    throw std::out_of_range("suffix length must lie in [0, " + longest.str() + "], got " + n.str());
  }
  DigitString digits = lazy(sys, n);
  const VSequence standard(DigitString::zeros(sys));
  BinaryWord word;
  for (std::size_t i = 1; i <= digits.size(); ++i) {
    word += standard.at(static_cast<int>(i) - 1).reversed().power(digits.digit(i));
  }
  return {std::move(digits), std::move(word)};
}

BinaryWord pal_closure(const BinaryWord& w) {
  for (std::size_t start = 0; start < w.size(); ++start) {
    if (w.suffix(w.size() - start).is_palindrome()) return w + w.prefix(start).reversed();
  }
  return w;
}

BinaryWord pal(const BinaryWord& v) {
  BinaryWord out;
  for (char x : v.view()) out = pal_closure(out + BinaryWord::letter(x));
  return out;
}

BinaryWord directive_word(const OstrowskiSystem& sys) {
  const std::vector<Integer> cs = sys.central_exponents();
  BinaryWord out;
  for (std::size_t i = 0; i < cs.size(); ++i) out += BinaryWord::letter(i % 2 == 0 ? 'a' : 'b').power(cs[i]);
  return out;
}

std::optional<Rational> slope(const BinaryWord& w) {
  if (w.empty()) throw std::domain_error("the empty word has no slope");
  if (w.count_a() == 0) return std::nullopt;
  return Rational(Integer(w.count_b()), Integer(w.count_a()));
}

Rational b_density(const BinaryWord& w) {
  if (w.empty()) throw std::domain_error("the empty word has no Slope");
  return Rational(Integer(w.count_b()), Integer(w.size()));
}

Rational density_from_slope(const std::optional<Rational>& s) {
  if (!s) return Rational(1);
  return *s / (1 + *s);
}

std::optional<Rational> slope_from_density(const Rational& density) {
  if (density < 0 || density > 1) throw std::domain_error("a Slope lies in [0, 1]");
  if (density == 1) return std::nullopt;
  return density / (1 - density);
}

DigitString normalize_a1(const DigitString& ds) {
  const OstrowskiSystem& sys = ds.system();
  if (sys.size() < 2 || sys.alpha(1) != 1) throw std::invalid_argument("normalize_a1 needs m >= 2 and a1 = 1");
  if (!is_legal(ds)) throw std::invalid_argument("normalize_a1 needs legal digits");
  std::vector<Integer> alphas(sys.alphas().begin() + 1, sys.alphas().end());
  alphas.front() += 1;
  std::vector<Integer> digits(ds.digits().begin() + 1, ds.digits().end());
  return DigitString(OstrowskiSystem(std::move(alphas)), std::move(digits));
}

DigitString normalize_am(const DigitString& ds) {
  const OstrowskiSystem& sys = ds.system();
  const std::size_t m = sys.size();
  if (m < 2 || sys.alpha(m) != 1) throw std::invalid_argument("normalize_am needs m >= 2 and am = 1");
  if (!is_legal(ds)) throw std::invalid_argument("normalize_am needs legal digits");
  std::vector<Integer> alphas(sys.alphas().begin(), sys.alphas().end() - 1);
  alphas.back() += 1;
  std::vector<Integer> digits(ds.digits().begin(), ds.digits().end() - 1);
  if (ds.digit(m) == 0) digits.back() += 1;
  return DigitString(OstrowskiSystem(std::move(alphas)), std::move(digits));
}

}  // namespace christoffel
