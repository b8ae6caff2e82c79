// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "christoffel/arith.hpp"
#include "christoffel/binary_word.hpp"
#include "christoffel/ostrowski.hpp"

namespace christoffel {

/// A reduced element of the free group on {a, b}. Letters are written a, b
/// and their inverses A, B.
class GroupWord {
 public:
  GroupWord() = default;

  /// Reduces any string over {a, b, A, B}; throws std::invalid_argument on
  /// other characters.
  static GroupWord reduce(std::string_view raw);
  static GroupWord from_word(const BinaryWord& w);

  [[nodiscard]] const std::string& str() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }

  [[nodiscard]] GroupWord inverse() const;
  /// Any integer exponent; negative exponents invert.
  [[nodiscard]] GroupWord pow(const Integer& k) const;

  /// |g|_x with inverse letters counted -1; x is 'a' or 'b'.
  [[nodiscard]] Integer letter_count(char x) const;
  [[nodiscard]] Integer algebraic_length() const { return letter_count('a') + letter_count('b'); }

  /// True when no inverse letter occurs.
  [[nodiscard]] bool is_positive() const noexcept;
  /// Throws std::domain_error unless is_positive().
  [[nodiscard]] BinaryWord to_binary_word() const;

  friend GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  explicit GroupWord(std::string reduced) : letters_(std::move(reduced)) {}
  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const GroupWord& g);

/// The V-recursion evaluated in the free group, so any integer digits work.
GroupWord v_group_word(const DigitString& ds);

/// h = M_{m-1}^{dm} ... M_1^{d2} M_0^{d1}. Satisfies h^-1 M_m h = V_m(ds) and
/// has algebraic length value(ds).
GroupWord conjugator_h(const DigitString& ds);

}  // namespace christoffel
