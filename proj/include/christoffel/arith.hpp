// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace christoffel {

/// Exact integer used for partial quotients, continuants and represented values.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Converts a nonnegative integer to a size usable for word construction.
/// Throws std::length_error when the value is negative or does not fit.
std::size_t to_size(const Integer& value);

inline std::string to_string(const Integer& value) { return value.str(); }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(const std::string& text);

}  // namespace christoffel
