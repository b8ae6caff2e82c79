// SPDX-License-Identifier: Apache-2.0

#include "christoffel/binary_word.hpp"

#include <algorithm>
#include <stdexcept>

namespace christoffel {

BinaryWord::BinaryWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'a' && c != 'b') {
      throw std::invalid_argument("binary words use only the letters a and b, got '" +
                                  letters_ + "'");
    }
  }
}

BinaryWord BinaryWord::letter(char x) {
  if (x != 'a' && x != 'b') throw std::invalid_argument("not a letter of {a,b}");
  return BinaryWord(std::string(1, x), Unchecked{});
}

std::size_t BinaryWord::count(char x) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

BinaryWord BinaryWord::prefix(std::size_t n) const {
  if (n > size()) throw std::out_of_range("prefix longer than word");
  return BinaryWord(letters_.substr(0, n), Unchecked{});
}

BinaryWord BinaryWord::suffix(std::size_t n) const {
  if (n > size()) throw std::out_of_range("suffix longer than word");
  return BinaryWord(letters_.substr(size() - n), Unchecked{});
}

BinaryWord BinaryWord::factor(std::size_t pos, std::size_t n) const {
  if (pos > size() || n > size() - pos) throw std::out_of_range("factor outside word");
  return BinaryWord(letters_.substr(pos, n), Unchecked{});
}

BinaryWord BinaryWord::reversed() const {
  return BinaryWord(std::string(letters_.rbegin(), letters_.rend()), Unchecked{});
}

BinaryWord BinaryWord::power(std::size_t k) const {
  std::string out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += letters_;
  return BinaryWord(std::move(out), Unchecked{});
}

BinaryWord BinaryWord::swapped() const {
  std::string out = letters_;
  for (char& c : out) c = (c == 'a') ? 'b' : 'a';
  return BinaryWord(std::move(out), Unchecked{});
}

bool BinaryWord::is_prefix_of(const BinaryWord& other) const noexcept {
  return size() <= other.size() && other.view().substr(0, size()) == view();
}

bool BinaryWord::is_suffix_of(const BinaryWord& other) const noexcept {
  return size() <= other.size() && other.view().substr(other.size() - size()) == view();
}

bool BinaryWord::is_palindrome() const noexcept {
  return std::equal(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(size() / 2),
                    letters_.rbegin());
}

std::strong_ordering operator<=>(const BinaryWord& lhs, const BinaryWord& rhs) {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  return lhs.letters_.compare(rhs.letters_) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << w.str(); }

}  // namespace christoffel
