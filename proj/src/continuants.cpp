// SPDX-License-Identifier: Apache-2.0

#include "christoffel/continuants.hpp"

#include <stdexcept>

namespace christoffel {

Integer continuant(std::span<const Integer> ns) {
  Integer before = kContinuantBeforeEmpty;
  Integer current = 1;
  for (const Integer& n : ns) {
    Integer next = current * n + before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

Rational cf_value(std::span<const Integer> ns) {
  if (ns.empty()) throw std::domain_error("empty continued fraction has no value");
  if (ns.front() < 0) throw std::domain_error("leading partial quotient must be nonnegative");
  for (std::size_t i = 1; i < ns.size(); ++i) {
    if (ns[i] < 1) throw std::domain_error("partial quotients after the first must be positive");
  }
  return Rational(continuant(ns), continuant(ns.subspan(1)));
}

namespace {

// Walks the tree by mediants; calls visit(node) for every node on the path
// and step(letter) for every edge.
template <typename Visit, typename Step>
void walk_stern_brocot(const Rational& s, Visit visit, Step step) {
  if (s <= 0) throw std::domain_error("Stern-Brocot nodes are positive rationals");
  const Integer p = boost::multiprecision::numerator(s);
  const Integer q = boost::multiprecision::denominator(s);
  // Bounds left = lp/lq, right = rp/rq (right starts at 1/0).
  Integer lp = 0, lq = 1, rp = 1, rq = 0;
  while (true) {
    Integer mp = lp + rp;
    Integer mq = lq + rq;
    visit(Rational(mp, mq));
    // Compare s = p/q with the mediant mp/mq.
    const Integer lhs = p * mq;
    const Integer rhs = mp * q;
    if (lhs == rhs) return;
    if (lhs < rhs) {
      step('a');
      rp = std::move(mp);
      rq = std::move(mq);
    } else {
      step('b');
      lp = std::move(mp);
      lq = std::move(mq);
    }
  }
}

}  // namespace

BinaryWord stern_brocot_path(const Rational& s) {
  std::string letters;
  walk_stern_brocot(s, [](const Rational&) {}, [&](char x) { letters.push_back(x); });
  return BinaryWord(std::move(letters));
}

std::vector<Rational> stern_brocot_nodes(const Rational& s) {
  std::vector<Rational> nodes;
  walk_stern_brocot(s, [&](const Rational& node) { nodes.push_back(node); }, [](char) {});
  return nodes;
}

}  // namespace christoffel
