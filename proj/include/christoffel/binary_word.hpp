// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "christoffel/arith.hpp"

namespace christoffel {

/// A finite word over the ordered alphabet a < b.
///
/// Stored as an ASCII string of 'a' and 'b'. Immutable operations return new
/// words; the empty word is the identity of concatenation.
class BinaryWord {
 public:
  BinaryWord() = default;

  /// Throws std::invalid_argument on any character other than 'a' or 'b'.
  explicit BinaryWord(std::string letters);
  explicit BinaryWord(std::string_view letters) : BinaryWord(std::string(letters)) {}
  explicit BinaryWord(const char* letters) : BinaryWord(std::string(letters)) {}

  static BinaryWord letter(char x);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] char operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] char front() const { return letters_.front(); }
  [[nodiscard]] char back() const { return letters_.back(); }

  [[nodiscard]] std::size_t count(char x) const noexcept;
  [[nodiscard]] std::size_t count_a() const noexcept { return count('a'); }
  [[nodiscard]] std::size_t count_b() const noexcept { return count('b'); }

  [[nodiscard]] const std::string& str() const noexcept { return letters_; }
  [[nodiscard]] std::string_view view() const noexcept { return letters_; }

  [[nodiscard]] BinaryWord prefix(std::size_t n) const;
  [[nodiscard]] BinaryWord suffix(std::size_t n) const;
  [[nodiscard]] BinaryWord factor(std::size_t pos, std::size_t n) const;
  [[nodiscard]] BinaryWord reversed() const;
  [[nodiscard]] BinaryWord power(std::size_t k) const;
  [[nodiscard]] BinaryWord power(const Integer& k) const { return power(to_size(k)); }
  /// Exchanges the letters a and b.
  [[nodiscard]] BinaryWord swapped() const;

  [[nodiscard]] bool is_prefix_of(const BinaryWord& other) const noexcept;
  [[nodiscard]] bool is_suffix_of(const BinaryWord& other) const noexcept;
  [[nodiscard]] bool is_palindrome() const noexcept;

  BinaryWord& operator+=(const BinaryWord& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  /// Length-lexicographic (shortlex) order.
  friend std::strong_ordering operator<=>(const BinaryWord& lhs, const BinaryWord& rhs);

 private:
  struct Unchecked {};
  BinaryWord(std::string letters, Unchecked) : letters_(std::move(letters)) {}

  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

/// Printable form; the empty word is shown as "ε" only by callers that want it.
inline const std::string& to_string(const BinaryWord& w) { return w.str(); }

}  // namespace christoffel
