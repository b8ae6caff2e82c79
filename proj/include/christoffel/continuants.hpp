// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "christoffel/arith.hpp"
#include "christoffel/binary_word.hpp"

namespace christoffel {

/// A finite sequence n1, ..., nk of partial quotients.
using PartialQuotients = std::vector<Integer>;

/// The continuant of index -1, conventionally zero.
inline const Integer kContinuantBeforeEmpty{0};

/// Continuant polynomial K(n1, ..., nk) evaluated by the right recursion
/// K_k = K_{k-1} nk + K_{k-2}, with K() = 1. Entries may be any integers.
Integer continuant(std::span<const Integer> ns);

inline Integer continuant(std::initializer_list<Integer> ns) {
  return continuant(std::span<const Integer>(ns.begin(), ns.size()));
}

/// Value of the finite continued fraction [n1; n2, ..., nk], i.e.
/// K(n1..nk) / K(n2..nk). The first entry may be zero, all others must be
/// positive. Throws std::domain_error on an empty sequence or a bad entry.
Rational cf_value(std::span<const Integer> ns);

inline Rational cf_value(std::initializer_list<Integer> ns) {
  return cf_value(std::span<const Integer>(ns.begin(), ns.size()));
}

/// Coding of the root-to-s path in the Stern-Brocot tree, a for a step to the
/// left (smaller) child and b for a step to the right. The root 1/1 codes as
/// the empty word. Throws std::domain_error when s <= 0.
BinaryWord stern_brocot_path(const Rational& s);

/// The nodes visited on the way from the root 1/1 down to s, both included.
std::vector<Rational> stern_brocot_nodes(const Rational& s);

}  // namespace christoffel
