// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "christoffel/arith.hpp"

namespace christoffel {

/// The integer numeration system attached to a finite sequence of positive
/// partial quotients a1, ..., am (m >= 1).
///
/// Derived sequences, all indexed as in the usual 1-based notation:
///   bound(i)            b1 = a1 - 1, bi = ai for i >= 2 (largest legal digit)
///   central_exponent(i) c1 = a1 - 1, cm = am - 1, ci = ai otherwise (m >= 2)
///   denominator(i)      q_{-1} = 0, q0 = 1, qi = K(a1, ..., ai)
///
/// The object is a cheap handle onto immutable shared data, so copies are
/// free and may be used from several threads.
class OstrowskiSystem {
 public:
  /// Throws std::invalid_argument when the sequence is empty or an entry is
  /// not positive.
  explicit OstrowskiSystem(std::vector<Integer> alphas);
  OstrowskiSystem(std::initializer_list<Integer> alphas)
      : OstrowskiSystem(std::vector<Integer>(alphas)) {}

  /// Number m of partial quotients.
  [[nodiscard]] std::size_t size() const noexcept { return data_->alphas.size(); }

  [[nodiscard]] const std::vector<Integer>& alphas() const noexcept { return data_->alphas; }
  [[nodiscard]] const Integer& alpha(std::size_t i) const;
  [[nodiscard]] const Integer& bound(std::size_t i) const;
  [[nodiscard]] std::span<const Integer> bounds() const noexcept { return data_->bounds; }
  /// Throws std::domain_error when m = 1, where the sequence is not defined.
  [[nodiscard]] Integer central_exponent(std::size_t i) const;
  [[nodiscard]] std::vector<Integer> central_exponents() const;
  /// qi for -1 <= i <= m.
  [[nodiscard]] const Integer& denominator(int i) const;

  /// q_m - 1, the largest value with a greedy representation.
  [[nodiscard]] Integer greedy_max() const { return denominator(last()) - 1; }
  /// q_m + q_{m-1} - 2, the largest value with a legal representation.
  [[nodiscard]] Integer lazy_max() const { return denominator(last()) + denominator(last() - 1) - 2; }

  /// The system a1, ..., ak for 1 <= k <= m.
  [[nodiscard]] OstrowskiSystem prefix(std::size_t k) const;

  friend bool operator==(const OstrowskiSystem& lhs, const OstrowskiSystem& rhs) {
    return lhs.data_ == rhs.data_ || lhs.data_->alphas == rhs.data_->alphas;
  }

 private:
  [[nodiscard]] int last() const noexcept { return static_cast<int>(size()); }

  struct Data {
    std::vector<Integer> alphas;
    std::vector<Integer> bounds;
    std::vector<Integer> denominators;  // q_{-1}, q_0, ..., q_m
  };
  std::shared_ptr<const Data> data_;
};

/// "alphas=[a1,...,am]"
std::string to_string(const OstrowskiSystem& sys);

/// Parses "2,1,3", "[2,1,3]" or "alphas=[2,1,3]".
OstrowskiSystem parse_system(const std::string& text);

/// Digits d1, ..., dm of a (possibly unrestricted) Ostrowski representation
/// N = d1 q0 + d2 q1 + ... + dm q_{m-1}. Always exactly m digits, d1 first.
class DigitString {
 public:
  /// Throws std::invalid_argument if the digit count differs from m.
  DigitString(OstrowskiSystem sys, std::vector<Integer> digits);

  /// The all-zero string.
  static DigitString zeros(const OstrowskiSystem& sys);

  [[nodiscard]] const OstrowskiSystem& system() const noexcept { return sys_; }
  [[nodiscard]] const std::vector<Integer>& digits() const noexcept { return digits_; }
  [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
  /// 1-based access, di for 1 <= i <= m.
  [[nodiscard]] const Integer& digit(std::size_t i) const;

  friend bool operator==(const DigitString&, const DigitString&) = default;

 private:
  OstrowskiSystem sys_;
  std::vector<Integer> digits_;
};

/// "[d1,d2,...,dm]"
std::string to_string(const DigitString& ds);
std::string digits_to_string(std::span<const Integer> digits);

/// Parses "1,0,2" or "[1,0,2]" into raw digits.
std::vector<Integer> parse_digits(const std::string& text);

/// Which of the representation conditions hold. Greedy and lazy are
/// independent flags; both imply legal.
struct Flavor {
  bool legal = false;
  bool greedy = false;
  bool lazy = false;
  friend bool operator==(const Flavor&, const Flavor&) = default;
};

std::string to_string(const Flavor& f);

/// N = sum di q_{i-1}; negative digits are allowed.
Integer value(const DigitString& ds);

Flavor classify(const DigitString& ds);
inline bool is_legal(const DigitString& ds) { return classify(ds).legal; }
inline bool is_greedy(const DigitString& ds) { return classify(ds).greedy; }
inline bool is_lazy(const DigitString& ds) { return classify(ds).lazy; }

/// The unique greedy representation of 0 <= n <= q_m - 1, by descending
/// Euclidean division. Throws std::out_of_range otherwise.
DigitString greedy(const OstrowskiSystem& sys, const Integer& n);

/// The unique lazy representation of 0 <= n <= q_m + q_{m-1} - 2.
/// Throws std::out_of_range otherwise.
DigitString lazy(const OstrowskiSystem& sys, const Integer& n);

/// Every legal representation of n, ordered lexicographically on d1, d2, ...
/// Exhaustive search over the digit box; empty when n is out of reach.
std::vector<DigitString> enumerate_legal(const OstrowskiSystem& sys, const Integer& n);

/// True when the first digits.size() digits equal one of the two alternating
/// sequences (0, b2, 0, b4, ...) or (b1, 0, b3, 0, ...). The empty sequence is
/// alternating. Throws std::invalid_argument on a non-legal digit.
bool is_alternating(const OstrowskiSystem& sys, std::span<const Integer> digits);
bool is_alternating(const DigitString& ds);

/// (b1 - d1, ..., bm - dm). Maps greedy strings to lazy ones.
/// Throws std::invalid_argument on non-legal input.
DigitString complement(const DigitString& ds);

}  // namespace christoffel
