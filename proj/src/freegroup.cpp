// SPDX-License-Identifier: Apache-2.0

#include "christoffel/freegroup.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "christoffel/words.hpp"

namespace christoffel {

namespace {

char inverse_letter(char x) {
  switch (x) {
    case 'a': return 'A';
    case 'b': return 'B';
    case 'A': return 'a';
    case 'B': return 'b';
    default: throw std::invalid_argument(std::string("not a free-group letter: '") + x + "'");
  }
}

// Appends raw letters to an already reduced stack, cancelling as it goes.
void push_reduced(std::string& stack, std::string_view raw) {
  for (char x : raw) {
    const char inv = inverse_letter(x);
    if (!stack.empty() && stack.back() == inv) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
}

}  // namespace

GroupWord GroupWord::reduce(std::string_view raw) {
  std::string stack;
  stack.reserve(raw.size());
  push_reduced(stack, raw);
  return GroupWord(std::move(stack));
}

GroupWord GroupWord::from_word(const BinaryWord& w) { return GroupWord(w.str()); }

GroupWord GroupWord::inverse() const {
  std::string out(letters_.rbegin(), letters_.rend());
  for (char& x : out) x = inverse_letter(x);
  return GroupWord(std::move(out));
}

GroupWord GroupWord::pow(const Integer& k) const {
  const GroupWord base = k < 0 ? inverse() : *this;
  const std::size_t times = to_size(k < 0 ? Integer(-k) : k);
  std::string stack;
  for (std::size_t i = 0; i < times; ++i) push_reduced(stack, base.letters_);
  return GroupWord(std::move(stack));
}

Integer GroupWord::letter_count(char x) const {
  if (x != 'a' && x != 'b') throw std::invalid_argument("letter counts are taken for a or b");
  const char inv = inverse_letter(x);
  return Integer(static_cast<long long>(std::count(letters_.begin(), letters_.end(), x))) -
         Integer(static_cast<long long>(std::count(letters_.begin(), letters_.end(), inv)));
}

bool GroupWord::is_positive() const noexcept {
  return std::none_of(letters_.begin(), letters_.end(), [](char x) { return x == 'A' || x == 'B'; });
}

BinaryWord GroupWord::to_binary_word() const {
  if (!is_positive()) throw std::domain_error("group word " + letters_ + " has inverse letters");
  return BinaryWord(letters_);
}

GroupWord operator*(const GroupWord& lhs, const GroupWord& rhs) {
  std::string stack = lhs.letters_;
  push_reduced(stack, rhs.letters_);
  return GroupWord(std::move(stack));
}

std::ostream& operator<<(std::ostream& os, const GroupWord& g) { return os << g.str(); }

GroupWord v_group_word(const DigitString& ds) {
  const OstrowskiSystem& sys = ds.system();
  GroupWord before = GroupWord::reduce("b");
  GroupWord prev = GroupWord::reduce("a");
  for (std::size_t i = 1; i <= ds.size(); ++i) {
    GroupWord next = prev.pow(sys.bound(i) - ds.digit(i)) * before * prev.pow(ds.digit(i));
    before = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

GroupWord conjugator_h(const DigitString& ds) {
  const VSequence standard(DigitString::zeros(ds.system()));
  GroupWord h;
  for (std::size_t i = ds.size(); i >= 1; --i) {
    h = h * GroupWord::from_word(standard.at(static_cast<int>(i) - 1)).pow(ds.digit(i));
  }
  return h;
}

}  // namespace christoffel
