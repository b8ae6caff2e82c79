// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <stdexcept>

#include "christoffel/borders.hpp"
#include "christoffel/words.hpp"
#include "oracles.hpp"

using namespace christoffel;

namespace {

const OstrowskiSystem kExample{2, 1, 3};

BinaryWord w(const char* s) { return BinaryWord(s); }

// Longest border by the direct period scan.
std::string scan_border(const std::string& s) { return s.substr(0, s.size() - oracle::scan_period(s)); }

// Rebuilds a theorem border from its symbolic description.
BinaryWord rebuild(const BorderStructure& s) {
  const DigitString ds(OstrowskiSystem(s.alphas), s.digits);
  const VSequence v(ds);
  const int m = static_cast<int>(ds.size());
  switch (s.base) {
    case BorderStructure::Base::previous: return v.at(m - 1).power(s.exponent);
    case BorderStructure::Base::second_previous: return v.at(m - 2).power(s.exponent);
    case BorderStructure::Base::previous_power_then_second:
      return (v.at(m - 1).power(ds.system().bound(ds.size()) - 1) + v.at(m - 2)).power(s.exponent);
    case BorderStructure::Base::rotated_standard: break;
  }
  return {};
}

}  // namespace

TEST_SUITE("borders") {

TEST_CASE("longest_border_bruteforce") {
  CHECK(longest_border_bruteforce(w("baabaabaaba")).border == w("baabaaba"));
  CHECK(longest_border_bruteforce(w("aabaababaab")).border == w("aab"));
  CHECK_FALSE(longest_border_bruteforce(w("aabaabaabab")).border.has_value());
  CHECK(longest_border_bruteforce(w("aabaabaabab")).period == 11);
  CHECK_THROWS_AS(longest_border_bruteforce(BinaryWord()), std::invalid_argument);
  CHECK(h_word(kExample, 1) == w("baabaabaaba"));
  CHECK(h_word(kExample, 5) == w("aabaababaab"));
}

TEST_CASE("longest_border_theorem examples") {
  const auto r1 = longest_border_theorem(greedy(kExample, 1));
  CHECK(greedy(kExample, 1).digits() == std::vector<Integer>{1, 0, 0});
  REQUIRE(r1.structure.has_value());
  CHECK(r1.structure->rule == "(v)");
  CHECK(r1.border == w("baabaaba"));
  CHECK(r1.period == 3);

  const auto r5 = longest_border_theorem(greedy(kExample, 5));
  CHECK(greedy(kExample, 5).digits() == std::vector<Integer>{0, 1, 1});
  REQUIRE(r5.structure.has_value());
  CHECK(r5.structure->rule == "(iv)");
  CHECK(r5.structure->exponent == 1);
  CHECK(r5.border == w("aab"));

  const DigitString g3 = greedy(kExample, 3);
  CHECK(g3.digits() == std::vector<Integer>{0, 0, 1});
  const auto r3 = longest_border_theorem(g3);
  REQUIRE(r3.structure.has_value());
  CHECK(r3.structure->rule == "(iii)");
  CHECK(r3.structure->exponent == 1);
  CHECK(r3.border->str() == scan_border(h_word(kExample, 3).str()));

  const auto christoffel = longest_border_theorem(greedy(kExample, 2));
  CHECK(christoffel.christoffel);
  CHECK_FALSE(christoffel.border.has_value());
  CHECK_THROWS_AS(longest_border_theorem(DigitString(kExample, {1, 1, 0})), std::invalid_argument);
  CHECK(to_string(*r1.structure) == "V_{m-1}^{b_m-1} V_{m-2} by (v) on alphas=[2,1,3]");
}

TEST_CASE("reductions are reported") {
  const auto lifted = longest_border_theorem(greedy(OstrowskiSystem{4}, 1));
  CHECK(lifted.reductions.size() == 1);
  CHECK(lifted.border == w("a"));
  const auto exchanged = longest_border_theorem(greedy(OstrowskiSystem{1, 3}, 1));
  CHECK_FALSE(exchanged.reductions.empty());
  CHECK(exchanged.border->str() == scan_border(h_word(OstrowskiSystem{1, 3}, 1).str()));
}

TEST_CASE("longest_border_closed examples") {
  const auto r1 = longest_border_closed(kExample, 1);
  CHECK(r1.border == w("baabaaba"));
  CHECK(r1.structure->alphas == std::vector<Integer>{2, 1, 2});
  CHECK(rotated_standard({2, 1, 2}, 1) == w("baabaaba"));
  const auto r5 = longest_border_closed(kExample, 5);
  CHECK(r5.border == w("aab"));
  CHECK(r5.structure->exponent == 1);
  CHECK(r5.structure->alphas == std::vector<Integer>{2, 1});
  CHECK_FALSE(longest_border_closed(kExample, 2).border.has_value());
  CHECK(longest_border_closed(kExample, 2).christoffel);
  CHECK_THROWS_AS(longest_border_closed(kExample, 11), std::out_of_range);
  CHECK(rotated_standard({}, 0) == w("a"));
}

TEST_CASE("theorem and closed form agree with the period scan") {
  std::size_t exceptional_iii = 0, exceptional_vi = 0;
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    const int m = static_cast<int>(sys.size());
    for (Integer n = 0; n <= sys.greedy_max(); ++n) {
      const std::string word = h_word(sys, n).str();
      const std::string expected = scan_border(word);
      const DigitString g = greedy(sys, n);
      const auto theorem = longest_border_theorem(g);
      const auto closed = longest_border_closed(sys, n);
      CHECK(theorem.border.value_or(BinaryWord()).str() == expected);
      CHECK(closed.border.value_or(BinaryWord()).str() == expected);
      CHECK(theorem.period == oracle::scan_period(word));
      const bool christoffel_index = n == sys.denominator(m - 1) - 1 || n == sys.denominator(m) - 1;
      CHECK(closed.christoffel == christoffel_index);
      CHECK(theorem.christoffel == christoffel_index);
      if (theorem.structure) {
        // The letter exchange of the a1 = 1 reduction is undone on the result.
        bool exchanged = false;
        for (const auto& note : theorem.reductions) exchanged = exchanged || note.starts_with("a1 = 1");
        const BinaryWord rebuilt = rebuild(*theorem.structure);
        CHECK((exchanged ? rebuilt.swapped() : rebuilt).str() == expected);
        const auto& s = *theorem.structure;
        const DigitString r(OstrowskiSystem(s.alphas), s.digits);
        const std::size_t k = r.size();
        if (s.rule == "(iii)" && s.exponent == std::min<Integer>(r.system().bound(k) - r.digit(k), r.digit(k)) + 1) ++exceptional_iii;
        if (s.rule == "(vi)" &&
            s.exponent == std::min<Integer>(r.system().bound(k - 1) - r.digit(k - 1), r.digit(k - 1) + 1) + 1) {
          ++exceptional_vi;
        }
      }
      if (closed.structure) CHECK(rotated_standard(closed.structure->alphas, n).power(closed.structure->exponent).str() == expected);
    }
  }
  CHECK(exceptional_iii > 0);
  CHECK(exceptional_vi > 0);
}

TEST_CASE("all_borders and smallest_period") {
  CHECK(all_borders(w("baabaabaaba")) == std::vector<BinaryWord>{w("baabaaba"), w("baaba"), w("ba")});
  CHECK(all_borders(w("aabaabaabab")).empty());
  CHECK(all_borders(w("aa")) == std::vector<BinaryWord>{w("a")});
  CHECK(smallest_period(w("baabaabaaba")) == 3);
  CHECK(smallest_period(w("aabaabaabab")) == 11);
  CHECK(smallest_period(w("aaaa")) == 1);
  CHECK_THROWS_AS(smallest_period(BinaryWord()), std::invalid_argument);
  for (std::size_t len = 1; len <= 10; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s += (bits >> i) & 1U ? 'b' : 'a';
      CHECK(smallest_period(BinaryWord(s)) == oracle::scan_period(s));
    }
  }
}

TEST_CASE("borders of Christoffel conjugates are powers of Christoffel conjugates") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    for (Integer n = 0; n <= sys.greedy_max(); ++n) {
      for (const BinaryWord& border : all_borders(h_word(sys, n))) {
        const BinaryWord root = primitive_root(border);
        CHECK(border == root.power(border.size() / root.size()));
        CHECK(oracle::is_christoffel_class(root.str()));
      }
    }
  }
}

TEST_CASE("common_affixes examples") {
  const auto c = common_affixes(DigitString::zeros(kExample), 0);
  CHECK(c.prefix == w("a"));
  CHECK(c.suffix.empty());
  CHECK(c.factorizations_hold);
  CHECK(common_affixes(DigitString(kExample, {1, 0, 0}), 0).prefix.empty());
  const auto c1 = common_affixes(DigitString(kExample, {1, 0, 2}), 1);
  CHECK(c1.prefix.size() + c1.suffix.size() == 3);
  CHECK_THROWS_AS(common_affixes(DigitString::zeros(kExample), 3), std::out_of_range);
  CHECK_THROWS_AS(common_affixes(DigitString(kExample, {2, 0, 0}), 0), std::invalid_argument);
}

TEST_CASE("common affixes are the longest common prefix and suffix") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    oracle::for_each_legal(alphas, [&](const std::vector<Integer>& d) {
      const DigitString digits(sys, d);
      const VSequence v(digits);
      for (std::size_t k = 0; k < sys.size(); ++k) {
        const int ki = static_cast<int>(k);
        const auto c = common_affixes(digits, k);
        const std::string x = (v.at(ki + 1) + v.at(ki)).str();
        const std::string y = (v.at(ki) + v.at(ki + 1)).str();
        CHECK(c.factorizations_hold);
        CHECK(c.prefix.size() == oracle::common_prefix_length(x, y));
        CHECK(c.suffix.size() == oracle::common_prefix_length(oracle::reversed(x), oracle::reversed(y)));
        CHECK(Integer(c.prefix.size() + c.suffix.size()) == sys.denominator(ki + 1) + sys.denominator(ki) - 2);
        const BinaryWord xw = c.suffix + c.prefix;
        CHECK(xw.is_palindrome());
        CHECK(oracle::is_rotation_of("a" + xw.str() + "b", "b" + xw.str() + "a"));
      }
    });
  }
}

TEST_CASE("prefix and suffix criteria") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    const std::size_t m = sys.size();
    const int mi = static_cast<int>(m);
    oracle::for_each_legal(alphas, [&](const std::vector<Integer>& d) {
      const DigitString digits(sys, d);
      const VSequence v(digits);
      for (std::size_t k = 0; k < m; ++k) {
        const int ki = static_cast<int>(k);
        if (v.at(ki + 1).is_prefix_of(v.at(ki) + v.at(ki + 1))) CHECK(d[k] == 0);
        if (v.at(ki + 1).is_suffix_of(v.at(ki + 1) + v.at(ki))) CHECK(d[k] == sys.bound(k + 1));
      }
      if (!is_greedy(digits)) return;
      const bool christoffel_top = is_alternating(digits) && d[m - 1] == sys.bound(m);
      CHECK(v.at(mi - 1).is_prefix_of(v.at(mi)) == !christoffel_top);
      if (m < 2) return;
      const bool not_prefix = !v.at(mi - 1).is_prefix_of(v.at(mi - 2) + v.at(mi - 1));
      const bool alternating = is_alternating(sys, std::span<const Integer>(d).first(m - 1));
      if (d[m - 2] == 0) CHECK(not_prefix == alternating);
      else CHECK(not_prefix);
    });
  }
}

TEST_CASE("a nonzero second-to-last digit rules out the prefix") {
  // (2,1) with digits (1,0): V_1 = ba is not a prefix of V_0 V_1 = aba even
  // though d_1 = b_1 is nonzero.
  const DigitString d(OstrowskiSystem{2, 1}, {1, 0});
  REQUIRE(is_greedy(d));
  const VSequence v(d);
  CHECK(v.at(1) == w("ba"));
  CHECK_FALSE(v.at(1).is_prefix_of(v.at(0) + v.at(1)));
}

}
