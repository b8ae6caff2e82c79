// SPDX-License-Identifier: Apache-2.0

#include "christoffel/borders.hpp"

#include <algorithm>
#include <stdexcept>

#include "christoffel/words.hpp"

namespace christoffel {

namespace {

BorderResult borderless(std::size_t length, bool christoffel) {
  BorderResult r;
  r.period = length;
  r.christoffel = christoffel;
  return r;
}

BorderResult with_border(std::size_t length, BinaryWord border, BorderStructure structure) {
  BorderResult r;
  r.period = length - border.size();
  r.border = std::move(border);
  r.structure = std::move(structure);
  return r;
}

BorderStructure theorem_structure(const DigitString& ds, BorderStructure::Base base, Integer exponent,
                                  std::string rule) {
  return {base, std::move(exponent), ds.system().alphas(), ds.digits(), std::move(rule)};
}

// Case analysis on a greedy, non-Christoffel ds with m >= 3, or m = 2 and b1 >= 1.
BorderResult dispatch_cases(const DigitString& ds) {
  using Base = BorderStructure::Base;
  const OstrowskiSystem& sys = ds.system();
  const std::size_t m = ds.size();
  const int mi = static_cast<int>(m);
  const VSequence v(ds);
  const std::size_t length = v.last().size();

  const Integer& dm = ds.digit(m);
  const Integer& bm = sys.bound(m);
  const Integer& dp = ds.digit(m - 1);
  const Integer& bp = sys.bound(m - 1);
  const Integer ell = std::min<Integer>(bm - dm, dm);
  const Integer h = std::min<Integer>(bp - dp, dp + 1);
  const std::span<const Integer> digits(ds.digits());

  auto previous_power = [&](const Integer& e, const char* rule) {
    return with_border(length, v.at(mi - 1).power(e), theorem_structure(ds, Base::previous, e, rule));
  };
  auto second_previous_power = [&](const Integer& e, const char* rule) {
    return with_border(length, v.at(mi - 2).power(e), theorem_structure(ds, Base::second_previous, e, rule));
  };

  if (dm == bm) return previous_power(1, "(i)");
  if (dm >= 1 && dm <= bm - 1) {
    if (dp >= 1 && dp <= bp - 1) return previous_power(ell, "(ii)");
    if (dp == 0) {
      const bool exceptional = bm - dm < dm && !is_alternating(sys, digits.first(m - 1));
      return previous_power(exceptional ? ell + 1 : ell, "(iii)");
    }
    if (dp == bp) return previous_power(ell, "(iv)");
  }
  if (dm == 0 && bm >= 2) {
    BinaryWord border = v.at(mi - 1).power(bm - 1) + v.at(mi - 2);
    return with_border(length, std::move(border),
                       theorem_structure(ds, Base::previous_power_then_second, 1, "(v)"));
  }
  if (dm == 0 && bm == 1) {
    if (bp - dp >= 1) {
      const bool exceptional = m >= 3 && ds.digit(m - 2) == 0 && bp - dp < dp + 1 &&
                               !is_alternating(sys, digits.first(m - 2));
      return second_previous_power(exceptional ? h + 1 : h, "(vi)");
    }
    if (dp == bp) return second_previous_power(1, "(vii)");
  }
  throw std::logic_error("no border case applies to " + to_string(sys) + " digits " + to_string(ds));
}

BorderResult theorem_on_reduced(const DigitString& ds) {
  const OstrowskiSystem& sys = ds.system();
  if (sys.size() == 1) {
    // a^{b1-d} b a^d with 1 <= d <= b1 - 1 equals V_2(d - 1, 0) over (a1 - 1, 1).
    const Integer& d = ds.digit(1);
    const DigitString lifted(OstrowskiSystem({sys.alpha(1) - 1, Integer(1)}), {d - 1, Integer(0)});
    BorderResult r = dispatch_cases(lifted);
    r.reductions.insert(r.reductions.begin(), "m = 1: lifted to " + to_string(lifted.system()) + " digits " +
                                                  to_string(lifted));
    return r;
  }
  if (sys.size() == 2 && sys.bound(1) == 0) {
    const DigitString reduced = normalize_a1(ds);
    BorderResult r = theorem_on_reduced(reduced);
    if (r.border) r.border = exchange_morphism()(*r.border);
    r.reductions.insert(r.reductions.begin(), "a1 = 1: letters exchanged, " + to_string(reduced.system()) +
                                                  " digits " + to_string(reduced));
    return r;
  }
  return dispatch_cases(ds);
}

}  // namespace

std::string to_string(const BorderStructure& s) {
  std::string base;
  switch (s.base) {
    case BorderStructure::Base::previous: base = "V_{m-1}"; break;
    case BorderStructure::Base::second_previous: base = "V_{m-2}"; break;
    case BorderStructure::Base::previous_power_then_second: base = "V_{m-1}^{b_m-1} V_{m-2}"; break;
    case BorderStructure::Base::rotated_standard: base = "H_N" + digits_to_string(s.alphas); break;
  }
  std::string out = base;
  if (s.exponent != 1) out += "^" + s.exponent.str();
  out += " by " + s.rule;
  if (s.base != BorderStructure::Base::rotated_standard) out += " on alphas=" + digits_to_string(s.alphas);
  return out;
}

BorderResult longest_border_bruteforce(const BinaryWord& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no borders");
  for (std::size_t len = w.size() - 1; len >= 1; --len) {
    if (w.view().substr(0, len) == w.view().substr(w.size() - len)) {
      BorderResult r;
      r.border = w.prefix(len);
      r.period = w.size() - len;
      return r;
    }
  }
  return borderless(w.size(), false);
}

BorderResult longest_border_theorem(const DigitString& ds) {
  if (!is_greedy(ds)) throw std::invalid_argument("the border theorem needs greedy digits, got " + to_string(ds));
  if (is_christoffel(ds) != ChristoffelKind::none) {
    return borderless(to_size(ds.system().denominator(static_cast<int>(ds.size()))), true);
  }
  return theorem_on_reduced(ds);
}

BinaryWord rotated_standard(const std::vector<Integer>& alphas, const Integer& n) {
  if (alphas.empty()) return BinaryWord("a");
  return h_word(OstrowskiSystem(alphas), n);
}

BorderResult longest_border_closed(const OstrowskiSystem& sys, const Integer& n) {
  const std::size_t m = sys.size();
  const int mi = static_cast<int>(m);
  const Integer& q = sys.denominator(mi);
  const Integer& q_prev = sys.denominator(mi - 1);
  if (n < 0 || n > q - 1) {
    throw std::out_of_range("closed form needs 0 <= N <= " + Integer(q - 1).str() + ", got " + n.str());
  }
  const std::size_t length = to_size(q);
  if (n == q_prev - 1 || n == q - 1) return borderless(length, true);

  const std::vector<Integer>& alphas = sys.alphas();
  auto first = [&](std::size_t k) { return std::vector<Integer>(alphas.begin(), alphas.begin() + static_cast<std::ptrdiff_t>(k)); };
  auto rotated_power = [&](std::vector<Integer> args, const Integer& t, const char* rule) {
    BinaryWord border = rotated_standard(args, n).power(t);
    return with_border(length, std::move(border),
                       BorderStructure{BorderStructure::Base::rotated_standard, t, std::move(args), {}, rule});
  };

  if (sys.alpha(m) >= 2) {
    if (n < q_prev - 1) {
      std::vector<Integer> args = alphas;
      args.back() -= 1;
      return rotated_power(std::move(args), 1, "(a1)");
    }
    const Integer t = std::min<Integer>(n / q_prev, 1 + (q - 2 - n) / q_prev);
    return rotated_power(first(m - 1), t, "(a2)");
  }
  // am = 1 forces m >= 2 here: for the system (1) every N is excluded above.
  if (n < q_prev - 1) {
    const Integer& q_second = sys.denominator(mi - 2);
    const Integer t = 1 + std::min<Integer>(n / q_second, (q_prev - 2 - n) / q_second);
    return rotated_power(first(m - 2), t, "(b1)");
  }
  return rotated_power(first(m - 1), 1, "(b2)");
}

std::vector<BinaryWord> all_borders(const BinaryWord& w) {
  std::vector<BinaryWord> chain;
  BinaryWord current = w;
  while (current.size() > 1) {
    BorderResult r = longest_border_bruteforce(current);
    if (!r.border) break;
    current = *r.border;
    chain.push_back(current);
  }
  return chain;
}

std::size_t smallest_period(const BinaryWord& w) { return longest_border_bruteforce(w).period; }

CommonAffixes common_affixes(const DigitString& ds, std::size_t k) {
  if (!is_legal(ds)) throw std::invalid_argument("common affixes need legal digits");
  if (k >= ds.size()) throw std::out_of_range("affix index must be below m");
  const OstrowskiSystem& sys = ds.system();
  const VSequence v(ds);
  CommonAffixes out;
  for (std::size_t j = k + 1; j >= 1; --j) {
    out.prefix += v.at(static_cast<int>(j) - 1).power(sys.bound(j) - ds.digit(j));
  }
  for (std::size_t j = 1; j <= k + 1; ++j) out.suffix += v.at(static_cast<int>(j) - 1).power(ds.digit(j));
  const BinaryWord ab("ab");
  const BinaryWord ba("ba");
  // Z_{(-1)^{k+1}} and Z_{(-1)^k} with Z_1 = ab, Z_{-1} = ba.
  out.separator_next = (k % 2 == 0) ? ba : ab;
  out.separator_prev = (k % 2 == 0) ? ab : ba;
  const int ki = static_cast<int>(k);
  out.factorizations_hold = v.at(ki + 1) + v.at(ki) == out.prefix + out.separator_next + out.suffix &&
                            v.at(ki) + v.at(ki + 1) == out.prefix + out.separator_prev + out.suffix;
  return out;
}

}  // namespace christoffel
