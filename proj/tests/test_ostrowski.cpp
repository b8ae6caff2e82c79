// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <stdexcept>

#include "christoffel/ostrowski.hpp"
#include "oracles.hpp"

using namespace christoffel;

namespace {

const OstrowskiSystem kExample{2, 1, 3};

DigitString ds(std::vector<Integer> digits) { return DigitString(kExample, std::move(digits)); }

}  // namespace

TEST_SUITE("ostrowski") {

TEST_CASE("derived sequences of the worked example") {
  CHECK(kExample.size() == 3);
  CHECK(kExample.bound(1) == 1);
  CHECK(kExample.bound(2) == 1);
  CHECK(kExample.bound(3) == 3);
  CHECK(kExample.central_exponents() == std::vector<Integer>{1, 1, 2});
  CHECK(kExample.denominator(-1) == 0);
  CHECK(kExample.denominator(0) == 1);
  CHECK(kExample.denominator(3) == 11);
  CHECK(kExample.greedy_max() == 10);
  CHECK(kExample.lazy_max() == 12);
  CHECK(kExample.prefix(2) == OstrowskiSystem{2, 1});
  CHECK_THROWS_AS((void)OstrowskiSystem{2}.central_exponent(1), std::domain_error);
  CHECK_THROWS_AS(OstrowskiSystem(std::vector<Integer>{}), std::invalid_argument);
  CHECK_THROWS_AS((OstrowskiSystem{2, 0}), std::invalid_argument);
}

TEST_CASE("parsing and printing") {
  CHECK(parse_system("2,1,3") == kExample);
  CHECK(parse_system("[2,1,3]") == kExample);
  CHECK(parse_system("alphas=[2,1,3]") == kExample);
  CHECK(to_string(kExample) == "alphas=[2,1,3]");
  CHECK(parse_digits("[1,0,2]") == std::vector<Integer>{1, 0, 2});
  CHECK(to_string(ds({1, 0, 2})) == "[1,0,2]");
  CHECK_THROWS_AS(parse_system("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(DigitString(kExample, {1, 0}), std::invalid_argument);
}

TEST_CASE("value") {
  CHECK(value(ds({0, 0, 0})) == 0);
  CHECK(value(ds({1, 0, 2})) == 7);
  CHECK(value(ds({1, 1, 3})) == 12);
  CHECK(value(ds({-1, 0, 0})) == -1);
}

TEST_CASE("greedy") {
  CHECK(greedy(kExample, 0) == ds({0, 0, 0}));
  CHECK(greedy(kExample, 7) == ds({1, 0, 2}));
  CHECK(greedy(kExample, 10) == ds({1, 0, 3}));
  CHECK_THROWS_AS(greedy(kExample, 11), std::out_of_range);
  CHECK_THROWS_AS(greedy(kExample, -1), std::out_of_range);
}

TEST_CASE("lazy") {
  CHECK(lazy(kExample, 0) == ds({0, 0, 0}));
  CHECK(lazy(kExample, 3) == ds({1, 1, 0}));
  CHECK(lazy(kExample, 12) == ds({1, 1, 3}));
  CHECK_THROWS_AS(lazy(kExample, 13), std::out_of_range);
}

TEST_CASE("classify") {
  CHECK(classify(ds({1, 0, 2})) == Flavor{true, true, true});
  CHECK(classify(ds({0, 0, 1})) == Flavor{true, true, false});
  CHECK(classify(ds({-1, 0, 0})) == Flavor{false, false, false});
  CHECK(classify(ds({2, 0, 0})) == Flavor{false, false, false});
}

TEST_CASE("enumerate_legal") {
  CHECK(enumerate_legal(kExample, 3) == std::vector<DigitString>{ds({0, 0, 1}), ds({1, 1, 0})});
  CHECK(enumerate_legal(kExample, 13).empty());
  CHECK(enumerate_legal(kExample, 0) == std::vector<DigitString>{ds({0, 0, 0})});
}

TEST_CASE("is_alternating") {
  CHECK(is_alternating(ds({1, 0, 3})));
  CHECK(is_alternating(ds({0, 1, 0})));
  CHECK_FALSE(is_alternating(ds({1, 1, 0})));
  CHECK(is_alternating(kExample, std::span<const Integer>{}));
  CHECK_THROWS_AS(is_alternating(ds({2, 0, 0})), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(ds({0, 0, 0})) == ds({1, 1, 3}));
  CHECK(complement(ds({1, 0, 2})) == ds({0, 1, 1}));
  CHECK(is_lazy(complement(ds({1, 0, 2}))));
  CHECK(complement(ds({1, 1, 3})) == ds({0, 0, 0}));
  CHECK_THROWS_AS(complement(ds({-1, 0, 0})), std::invalid_argument);
}

TEST_CASE("representations agree with brute-force enumeration") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    std::map<Integer, std::vector<std::vector<Integer>>> by_value;
    oracle::for_each_legal(alphas, [&](const std::vector<Integer>& d) { by_value[oracle::digit_value(alphas, d)].push_back(d); });
    const auto q = oracle::denominators(alphas);
    const Integer qm = q.back(), qm1 = q[q.size() - 2];
    CHECK(by_value.rbegin()->first == qm + qm1 - 2);
    for (const auto& [n, reps] : by_value) {
      std::vector<std::vector<Integer>> greedy_reps, lazy_reps;
      for (const auto& d : reps) {
        if (oracle::greedy_condition(alphas, d)) greedy_reps.push_back(d);
        if (oracle::lazy_condition(alphas, d)) lazy_reps.push_back(d);
        const Flavor f = classify(DigitString(sys, d));
        CHECK(f.legal);
        CHECK(f.greedy == oracle::greedy_condition(alphas, d));
        CHECK(f.lazy == oracle::lazy_condition(alphas, d));
      }
      CHECK(greedy_reps.size() == (n < qm ? 1U : 0U));
      REQUIRE(lazy_reps.size() == 1);
      if (n < qm) CHECK(greedy(sys, n).digits() == greedy_reps.front());
      CHECK(lazy(sys, n).digits() == lazy_reps.front());
      const auto listed = enumerate_legal(sys, n);
      CHECK(listed.size() == reps.size());
    }
  }
}

TEST_CASE("complement swaps greedy and lazy") {
  for (const auto& alphas : oracle::systems(1, 4, 3)) {
    const OstrowskiSystem sys(alphas);
    for (Integer n = 0; n <= sys.greedy_max(); ++n) {
      const DigitString g = greedy(sys, n);
      CHECK(is_lazy(complement(g)));
      CHECK(complement(complement(g)) == g);
    }
  }
}

TEST_CASE("alternating greedy strings sit at q_k - 1") {
  for (const auto& alphas : oracle::systems(1, 4, 4)) {
    const OstrowskiSystem sys(alphas);
    for (std::size_t k = 1; k <= sys.size(); ++k) {
      const DigitString g = greedy(sys, sys.denominator(static_cast<int>(k)) - 1);
      CHECK(is_alternating(sys, std::span<const Integer>(g.digits()).first(k)));
      CHECK(g.digit(k) == sys.bound(k));
      for (std::size_t i = k + 1; i <= sys.size(); ++i) CHECK(g.digit(i) == 0);
    }
  }
}

}
