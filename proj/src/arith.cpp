// SPDX-License-Identifier: Apache-2.0

#include "christoffel/arith.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace christoffel {

std::size_t to_size(const Integer& value) {
  if (value < 0 || value > std::numeric_limits<std::size_t>::max()) {
    throw std::length_error("integer " + value.str() + " is not a valid size");
  }
  return value.convert_to<std::size_t>();
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  Integer value(text.substr(text[0] == '+' ? 1 : 0));
  return value;
}

}  // namespace christoffel
