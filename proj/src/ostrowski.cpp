// SPDX-License-Identifier: Apache-2.0

#include "christoffel/ostrowski.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "christoffel/continuants.hpp"

namespace christoffel {

OstrowskiSystem::OstrowskiSystem(std::vector<Integer> alphas) {
  if (alphas.empty()) throw std::invalid_argument("an Ostrowski system needs at least one quotient");
  for (const Integer& a : alphas) {
    if (a < 1) throw std::invalid_argument("partial quotients must be positive, got " + a.str());
  }
  auto data = std::make_shared<Data>();
  data->bounds = alphas;
  data->bounds.front() -= 1;
  data->denominators.reserve(alphas.size() + 2);
  data->denominators.push_back(kContinuantBeforeEmpty);
  data->denominators.push_back(1);
  for (const Integer& a : alphas) {
    const std::size_t n = data->denominators.size();
    data->denominators.push_back(a * data->denominators[n - 1] + data->denominators[n - 2]);
  }
  data->alphas = std::move(alphas);
  data_ = std::move(data);
}

const Integer& OstrowskiSystem::alpha(std::size_t i) const {
  if (i < 1 || i > size()) throw std::out_of_range("quotient index out of range");
  return data_->alphas[i - 1];
}

const Integer& OstrowskiSystem::bound(std::size_t i) const {
  if (i < 1 || i > size()) throw std::out_of_range("digit index out of range");
  return data_->bounds[i - 1];
}

Integer OstrowskiSystem::central_exponent(std::size_t i) const {
  if (size() < 2) throw std::domain_error("central exponents need at least two quotients");
  if (i < 1 || i > size()) throw std::out_of_range("central exponent index out of range");
  return i < size() ? data_->bounds[i - 1] : data_->bounds.back() - 1;
}

std::vector<Integer> OstrowskiSystem::central_exponents() const {
  if (size() < 2) throw std::domain_error("central exponents need at least two quotients");
  std::vector<Integer> cs = data_->bounds;
  cs.back() -= 1;
  return cs;
}

const Integer& OstrowskiSystem::denominator(int i) const {
  if (i < -1 || i > static_cast<int>(size())) throw std::out_of_range("denominator index out of range");
  return data_->denominators[static_cast<std::size_t>(i + 1)];
}

OstrowskiSystem OstrowskiSystem::prefix(std::size_t k) const {
  if (k < 1 || k > size()) throw std::out_of_range("prefix length out of range");
  return OstrowskiSystem(std::vector<Integer>(alphas().begin(), alphas().begin() + static_cast<std::ptrdiff_t>(k)));
}

std::string digits_to_string(std::span<const Integer> digits) {
  std::string out = "[";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ',';
    out += digits[i].str();
  }
  return out + "]";
}

std::string to_string(const OstrowskiSystem& sys) { return "alphas=" + digits_to_string(sys.alphas()); }

std::vector<Integer> parse_digits(const std::string& text) {
  std::string body = text;
  if (body.rfind("alphas=", 0) == 0) body = body.substr(7);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Integer> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(parse_integer(item));
  }
  if (body.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  return out;
}

OstrowskiSystem parse_system(const std::string& text) { return OstrowskiSystem(parse_digits(text)); }

DigitString::DigitString(OstrowskiSystem sys, std::vector<Integer> digits)
    : sys_(std::move(sys)), digits_(std::move(digits)) {
  if (digits_.size() != sys_.size()) {
    throw std::invalid_argument("expected " + std::to_string(sys_.size()) + " digits, got " +
                                std::to_string(digits_.size()));
  }
}

DigitString DigitString::zeros(const OstrowskiSystem& sys) {
  return DigitString(sys, std::vector<Integer>(sys.size(), Integer(0)));
}

const Integer& DigitString::digit(std::size_t i) const {
  if (i < 1 || i > size()) throw std::out_of_range("digit index out of range");
  return digits_[i - 1];
}

std::string to_string(const DigitString& ds) { return digits_to_string(ds.digits()); }

std::string to_string(const Flavor& f) {
  if (!f.legal) return "unrestricted";
  if (f.greedy && f.lazy) return "greedy+lazy";
  if (f.greedy) return "greedy";
  if (f.lazy) return "lazy";
  return "legal";
}

Integer value(const DigitString& ds) {
  Integer n = 0;
  for (std::size_t i = 1; i <= ds.size(); ++i) {
    n += ds.digit(i) * ds.system().denominator(static_cast<int>(i) - 1);
  }
  return n;
}

Flavor classify(const DigitString& ds) {
  const OstrowskiSystem& sys = ds.system();
  const std::size_t m = ds.size();
  Flavor f;
  for (std::size_t i = 1; i <= m; ++i) {
    if (ds.digit(i) < 0 || ds.digit(i) > sys.bound(i)) return f;
  }
  f.legal = true;

  f.greedy = true;
  for (std::size_t i = 2; i <= m; ++i) {
    if (ds.digit(i) == sys.bound(i) && ds.digit(i - 1) != 0) {
      f.greedy = false;
      break;
    }
  }

  std::size_t top = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    if (ds.digit(i) != 0) top = i;
  }
  f.lazy = true;
  for (std::size_t i = 2; i <= top; ++i) {
    if (ds.digit(i) == 0 && ds.digit(i - 1) != sys.bound(i - 1)) {
      f.lazy = false;
      break;
    }
  }
  return f;
}

DigitString greedy(const OstrowskiSystem& sys, const Integer& n) {
  if (n < 0 || n > sys.greedy_max()) {
    throw std::out_of_range("greedy representation needs 0 <= N <= " + sys.greedy_max().str() +
                            ", got " + n.str());
  }
  std::vector<Integer> digits(sys.size());
  Integer rest = n;
  for (std::size_t i = sys.size(); i >= 1; --i) {
    const Integer& place = sys.denominator(static_cast<int>(i) - 1);
    digits[i - 1] = rest / place;
    rest -= digits[i - 1] * place;
  }
  return DigitString(sys, std::move(digits));
}

namespace {

// Fills digits[0..k-1] with the lazy representation of n, assuming
// n <= q_k + q_{k-1} - 2. Takes the largest multiple j of q_{k-1} that fits,
// recurses on the remainder and repairs the one pattern where the recursive
// result would break laziness once digit k becomes the top digit.
void lazy_descent(const OstrowskiSystem& sys, std::size_t k, Integer n, std::vector<Integer>& digits) {
  if (k == 1) {
    digits[0] = std::move(n);
    return;
  }
  const int ki = static_cast<int>(k);
  if (n <= sys.denominator(ki - 1) + sys.denominator(ki - 2) - 2) {
    digits[k - 1] = 0;
    lazy_descent(sys, k - 1, std::move(n), digits);
    return;
  }
  Integer j = std::min<Integer>(sys.alpha(k), n / sys.denominator(ki - 1));
  lazy_descent(sys, k - 1, n - j * sys.denominator(ki - 1), digits);
  if (k - 1 >= 2 && digits[k - 2] == 0 && digits[k - 3] != sys.bound(k - 2)) {
    digits[k - 3] += 1;
    digits[k - 2] = sys.bound(k - 1);
    j -= 1;
  }
  digits[k - 1] = std::move(j);
}

void enumerate_from(const OstrowskiSystem& sys, std::size_t i, const Integer& rest,
                    std::vector<Integer>& digits, std::vector<std::vector<Integer>>& out) {
  if (i == 0) {
    if (rest == 0) out.push_back(digits);
    return;
  }
  const Integer& place = sys.denominator(static_cast<int>(i) - 1);
  // Largest value the digits below position i can still contribute.
  const Integer below_max = (i >= 2) ? sys.denominator(static_cast<int>(i) - 1) +
                                           sys.denominator(static_cast<int>(i) - 2) - 2
                                     : Integer(0);
  for (Integer d = 0; d <= sys.bound(i) && d * place <= rest; ++d) {
    const Integer remaining = rest - d * place;
    if (remaining > below_max) continue;
    digits[i - 1] = d;
    enumerate_from(sys, i - 1, remaining, digits, out);
  }
  digits[i - 1] = 0;
}

}  // namespace

DigitString lazy(const OstrowskiSystem& sys, const Integer& n) {
  if (n < 0 || n > sys.lazy_max()) {
    throw std::out_of_range("lazy representation needs 0 <= N <= " + sys.lazy_max().str() +
                            ", got " + n.str());
  }
  std::vector<Integer> digits(sys.size());
  lazy_descent(sys, sys.size(), n, digits);
  return DigitString(sys, std::move(digits));
}

std::vector<DigitString> enumerate_legal(const OstrowskiSystem& sys, const Integer& n) {
  std::vector<std::vector<Integer>> found;
  if (n >= 0) {
    std::vector<Integer> digits(sys.size());
    enumerate_from(sys, sys.size(), n, digits, found);
  }
  std::sort(found.begin(), found.end());
  std::vector<DigitString> out;
  out.reserve(found.size());
  for (auto& digits : found) out.emplace_back(sys, std::move(digits));
  return out;
}

bool is_alternating(const OstrowskiSystem& sys, std::span<const Integer> digits) {
  if (digits.size() > sys.size()) throw std::invalid_argument("more digits than quotients");
  for (std::size_t i = 1; i <= digits.size(); ++i) {
    if (digits[i - 1] < 0 || digits[i - 1] > sys.bound(i)) {
      throw std::invalid_argument("alternation is only defined for legal digits");
    }
  }
  bool starts_zero = true;    // (0, b2, 0, b4, ...)
  bool starts_bound = true;   // (b1, 0, b3, 0, ...)
  for (std::size_t i = 1; i <= digits.size(); ++i) {
    const bool odd = (i % 2) == 1;
    const Integer& d = digits[i - 1];
    const Integer zero_pattern = odd ? Integer(0) : sys.bound(i);
    const Integer bound_pattern = odd ? sys.bound(i) : Integer(0);
    starts_zero = starts_zero && d == zero_pattern;
    starts_bound = starts_bound && d == bound_pattern;
  }
  return starts_zero || starts_bound;
}

bool is_alternating(const DigitString& ds) { return is_alternating(ds.system(), ds.digits()); }

DigitString complement(const DigitString& ds) {
  if (!is_legal(ds)) throw std::invalid_argument("complement is only defined for legal digits");
  std::vector<Integer> out(ds.size());
  for (std::size_t i = 1; i <= ds.size(); ++i) out[i - 1] = ds.system().bound(i) - ds.digit(i);
  return DigitString(ds.system(), std::move(out));
}

}  // namespace christoffel
