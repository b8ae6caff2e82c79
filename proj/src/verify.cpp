// SPDX-License-Identifier: Apache-2.0

#include "christoffel/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "christoffel/borders.hpp"
#include "christoffel/continuants.hpp"
#include "christoffel/freegroup.hpp"
#include "christoffel/graphs.hpp"
#include "christoffel/words.hpp"

namespace christoffel {

namespace {

using Outcome = std::optional<std::string>;

std::string at(const Integer& n) { return "N=" + n.str(); }
std::string at(const DigitString& ds) { return "digits " + to_string(ds) + " (N=" + value(ds).str() + ")"; }

// Calls visit on every digit vector with lo[i] <= d[i] <= hi[i]; stops at the
// first failure.
template <typename Visit>
Outcome sweep_box(const OstrowskiSystem& sys, const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                  Visit visit) {
  std::vector<Integer> digits = lo;
  while (true) {
    if (Outcome o = visit(DigitString(sys, digits))) return o;
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == hi[i]) {
      digits[i] = lo[i];
      ++i;
    }
    if (i == digits.size()) return std::nullopt;
    digits[i] += 1;
  }
}

template <typename Visit>
Outcome sweep_legal(const OstrowskiSystem& sys, Visit visit) {
  const std::vector<Integer> lo(sys.size(), Integer(0));
  const std::vector<Integer> hi(sys.bounds().begin(), sys.bounds().end());
  return sweep_box(sys, lo, hi, visit);
}

Integer top_denominator(const OstrowskiSystem& sys) { return sys.denominator(static_cast<int>(sys.size())); }

bool is_rotation_of(const BinaryWord& x, const BinaryWord& y) {
  return x.size() == y.size() && (y.str() + y.str()).find(x.str()) != std::string::npos;
}

// The lower Christoffel word with the given letter counts, read off the
// discretized segment from (0,0) to (count_a, count_b).
BinaryWord lower_christoffel(std::size_t count_a, std::size_t count_b) {
  const std::size_t n = count_a + count_b;
  std::string out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back((i * count_b) / n == ((i - 1) * count_b) / n ? 'a' : 'b');
  return BinaryWord(std::move(out));
}

std::vector<Integer> slice(const std::vector<Integer>& v, std::size_t from, std::size_t to) {
  return std::vector<Integer>(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

Outcome check_continuants(const OstrowskiSystem& sys) {
  const std::vector<Integer>& ns = sys.alphas();
  const std::size_t k = ns.size();
  if (continuant(ns) != top_denominator(sys)) return "K(alphas) differs from q_m";
  std::vector<Integer> reversed(ns.rbegin(), ns.rend());
  if (continuant(reversed) != continuant(ns)) return "continuant is not reversal symmetric";
  const Integer tail2 = k >= 2 ? continuant(slice(ns, 2, k)) : kContinuantBeforeEmpty;
  if (continuant(ns) != ns[0] * continuant(slice(ns, 1, k)) + tail2) return "left recursion fails";
  std::vector<Integer> lowered = ns;
  lowered[0] -= 1;
  if (continuant(ns) != continuant(lowered) + continuant(slice(ns, 1, k))) return "K(n1) = K(n1-1) + K(n2..) fails";
  Rational fold = Rational(ns.back());
  for (std::size_t i = k - 1; i-- > 0;) fold = Rational(ns[i]) + 1 / fold;
  if (cf_value(ns) != fold) return "cf_value differs from the direct fold";
  std::vector<Integer> with_zero{Integer(0)};
  with_zero.insert(with_zero.end(), ns.begin(), ns.end());
  if (cf_value(with_zero) != b_density(m_word(sys))) return "Slope of M_m differs from [0; a1, ..., am]";
  return std::nullopt;
}

Outcome check_numeration(const OstrowskiSystem& sys) {
  const std::size_t m = sys.size();
  const Integer q = top_denominator(sys);
  for (Integer n = 0; n <= sys.lazy_max(); ++n) {
    const std::vector<DigitString> all = enumerate_legal(sys, n);
    std::vector<const DigitString*> greedy_ones, lazy_ones;
    for (const auto& ds : all) {
      if (is_greedy(ds)) greedy_ones.push_back(&ds);
      if (is_lazy(ds)) lazy_ones.push_back(&ds);
    }
    const std::size_t expected_greedy = n <= q - 1 ? 1 : 0;
    if (greedy_ones.size() != expected_greedy) return at(n) + ": " + std::to_string(greedy_ones.size()) + " greedy strings";
    if (lazy_ones.size() != 1) return at(n) + ": " + std::to_string(lazy_ones.size()) + " lazy strings";
    if (expected_greedy && greedy(sys, n) != *greedy_ones.front()) return at(n) + ": greedy() disagrees with enumeration";
    if (lazy(sys, n) != *lazy_ones.front()) return at(n) + ": lazy() disagrees with enumeration";
  }
  return sweep_legal(sys, [&](const DigitString& ds) -> Outcome {
    const Flavor f = classify(ds);
    for (std::size_t k = 1; k <= m; ++k) {
      const OstrowskiSystem prefix_sys = sys.prefix(k);
      const DigitString prefix(prefix_sys, slice(ds.digits(), 0, k));
      const Integer n = value(prefix);
      const int ki = static_cast<int>(k);
      const Integer qk = sys.denominator(ki), qk1 = sys.denominator(ki - 1);
      const Integer qk2 = k >= 2 ? sys.denominator(ki - 2) : Integer(0);
      const bool top_nonzero = ds.digit(k) != 0;
      if (f.greedy) {
        if (n > qk - 1 || (top_nonzero && n <= qk1 - 1)) return at(ds) + ": greedy bound fails at k=" + std::to_string(k);
      }
      if (f.lazy) {
        if (n > qk + qk1 - 2 || (top_nonzero && n <= qk1 + qk2 - 2)) {
          return at(ds) + ": lazy bound fails at k=" + std::to_string(k);
        }
        if ((ds.digit(k) == sys.bound(k)) != (n >= qk - 1)) return at(ds) + ": lazy top-digit criterion fails";
      }
      if (is_alternating(sys, std::span<const Integer>(ds.digits()).first(k)) && top_nonzero && n != qk - 1) {
        return at(ds) + ": alternating prefix without value q_k - 1";
      }
    }
    if (f.greedy) {
      const DigitString comp = complement(ds);
      if (!is_lazy(comp)) return at(ds) + ": complement of a greedy string is not lazy";
      const bool small = value(comp) <= sys.denominator(static_cast<int>(m) - 1) - 1;
      if (small != (ds.digit(m) == sys.bound(m) && is_alternating(ds))) return at(ds) + ": complement bound criterion fails";
    }
    return std::nullopt;
  });
}

Outcome check_conjugates(const OstrowskiSystem& sys) {
  const std::size_t m = sys.size();
  const BinaryWord standard = m_word(sys);
  const Integer q = top_denominator(sys);
  std::vector<Integer> without_first = slice(sys.alphas(), 1, m);
  std::vector<Integer> lowered = sys.alphas();
  lowered[0] -= 1;
  const Integer count_a = continuant(lowered);
  const Integer count_b = continuant(without_first);
  const std::optional<BinaryWord> central = q >= 2 ? std::optional<BinaryWord>(central_word(sys)) : std::nullopt;

  Outcome o = sweep_legal(sys, [&](const DigitString& ds) -> Outcome {
    const VSequence v(ds);
    const BinaryWord& w = v.last();
    const Integer n = value(ds);
    if (w != rotate(standard, n)) return at(ds) + ": V_m is not C^N(M_m)";
    if (Integer(w.count_a()) != count_a || Integer(w.count_b()) != count_b) return at(ds) + ": letter counts wrong";
    if (w.reversed() != v_word(complement(ds))) return at(ds) + ": mirror identity fails";
    Morphism chain{BinaryWord("a"), BinaryWord("b")};
    for (std::size_t i = 1; i <= m; ++i) {
      chain = compose(chain, pi_morphism(to_size(sys.bound(i) - ds.digit(i)), to_size(ds.digit(i))));
    }
    if (chain.image_a != w || chain.image_b != v.at(static_cast<int>(m) - 1)) return at(ds) + ": morphism chain fails";
    if (central && n <= q - 2 && frid_prefix(ds) != central->prefix(to_size(n))) {
      return at(ds) + ": prefix factorization differs from the central word";
    }
    return std::nullopt;
  });
  if (o) return o;

  std::set<BinaryWord> images;
  for (Integer n = 0; n < q; ++n) images.insert(v_word(greedy(sys, n)));
  std::set<BinaryWord> rotations;
  for (Integer n = 0; n < q; ++n) rotations.insert(rotate(standard, n));
  if (images.size() != to_size(q) || images != rotations) return "greedy N -> V_m is not a bijection onto the class";

  // The class holds at most one palindrome, and one exactly when q_m is odd;
  // even bounds b_i are sufficient (d_i = b_i / 2) but not necessary.
  std::size_t palindromes = 0;
  for (const auto& r : rotations) palindromes += r.is_palindrome() ? 1 : 0;
  bool all_even = true;
  for (std::size_t i = 1; i <= m; ++i) all_even = all_even && sys.bound(i) % 2 == 0;
  if (palindromes > 1 || (palindromes == 1) != (q % 2 == 1) || (all_even && palindromes == 0)) {
    return "palindrome-in-class criterion fails";
  }

  AbelianMatrix product;
  product.entries = {{{Integer(1), Integer(0)}, {Integer(0), Integer(1)}}};
  Morphism standard_chain{BinaryWord("a"), BinaryWord("b")};
  for (std::size_t i = 1; i <= m; ++i) {
    const Morphism step = pi_morphism(to_size(sys.bound(i)), 0);
    if (abelianization(step) != AbelianMatrix::continuant_step(sys.bound(i))) return "M(pi(i,j)) is not P(i+j)";
    standard_chain = compose(standard_chain, step);
    product = product * AbelianMatrix::continuant_step(sys.bound(i));
  }
  if (standard_chain(BinaryWord("a")) != standard) return "pi(b1,0)...pi(bm,0)(a) differs from M_m";
  if (abelianization(standard_chain) != product) return "abelianization is not multiplicative";
  return std::nullopt;
}

Outcome check_free_group(const OstrowskiSystem& sys) {
  const std::size_t m = sys.size();
  const BinaryWord standard = m_word(sys);
  const GroupWord standard_g = GroupWord::from_word(standard);
  const Integer q = top_denominator(sys);
  std::vector<Integer> lo(m, Integer(-2)), hi(m);
  for (std::size_t i = 1; i <= m; ++i) hi[i - 1] = sys.bound(i) + 2;
  return sweep_box(sys, lo, hi, [&](const DigitString& ds) -> Outcome {
    const GroupWord h = conjugator_h(ds);
    const GroupWord v = v_group_word(ds);
    if (h.inverse() * standard_g * h != v) return at(ds) + ": h^-1 M h differs from V";
    if (h.algebraic_length() != value(ds)) return at(ds) + ": |h| differs from N";
    if (is_legal(ds)) {
      if (!h.is_positive()) return at(ds) + ": h has inverse letters";
      if (value(ds) < q && !h.to_binary_word().is_prefix_of(standard)) return at(ds) + ": h is not a prefix of M_m";
      if (!v.is_positive() || v.to_binary_word() != v_word(ds)) return at(ds) + ": group and word recursions differ";
    }
    return std::nullopt;
  });
}

Outcome check_standard_words(const OstrowskiSystem& sys) {
  const std::size_t m = sys.size();
  const BinaryWord standard = m_word(sys);
  const Integer q = top_denominator(sys);
  if (standard.size() >= 2) {
    const BinaryWord p = central_word(sys);
    if (!p.is_palindrome()) return "central word is not a palindrome";
    const BinaryWord tail = standard.suffix(2);
    if (tail != BinaryWord(m % 2 == 1 ? "ab" : "ba")) return "M_m ends with " + tail.str();
    if (!is_rotation_of(p + tail.reversed(), standard)) return "the other standard word is not in the class";
    for (Integer n = 0; n <= q - 2; ++n) {
      const SuffixFactorization f = suffix_factorization(sys, n);
      if (f.word != p.suffix(to_size(n))) return at(n) + ": suffix factorization differs from the suffix";
    }
  }
  if (m >= 2) {
    const std::vector<Integer> cs = sys.central_exponents();
    const VSequence standards(DigitString::zeros(sys));
    for (std::size_t i = 1; i <= m; ++i) {
      BinaryWord rest;
      for (std::size_t j = i - 1; j >= 1; --j) rest += standards.at(static_cast<int>(j) - 1).power(cs[j - 1]);
      for (Integer c = 0; c <= cs[i - 1]; ++c) {
        if (!(standards.at(static_cast<int>(i) - 1).power(c) + rest).is_palindrome()) {
          return "M_{i-1}^c M_{i-2}^{c_{i-1}} ... is not a palindrome for i=" + std::to_string(i) + ", c=" + c.str();
        }
      }
    }
    if (suffix_factorization(sys, q - 2).digits.digits() != cs) {
      return "lazy digits of q_m - 2 are not the central exponents";
    }
    if (pal(directive_word(sys)) != central_word(sys)) return "Pal(directive word) differs from the central word";
    if (stern_brocot_path(*slope(standard)) != directive_word(sys)) return "Stern-Brocot path differs from the directive word";
  }
  return std::nullopt;
}

Outcome check_christoffel(const OstrowskiSystem& sys) {
  const Integer q = top_denominator(sys);
  for (Integer n = 0; n < q; ++n) {
    const DigitString ds = greedy(sys, n);
    const BinaryWord w = v_word(ds);
    const BinaryWord lower = lower_christoffel(w.count_a(), w.count_b());
    const ChristoffelKind kind = is_christoffel(ds);
    const bool is_lower = kind == ChristoffelKind::lower || kind == ChristoffelKind::lower_and_upper;
    const bool is_upper = kind == ChristoffelKind::upper || kind == ChristoffelKind::lower_and_upper;
    if (is_lower != (w == lower)) return at(n) + ": lower Christoffel classification wrong";
    if (is_upper != (w == lower.reversed())) return at(n) + ": upper Christoffel classification wrong";
    if ((kind != ChristoffelKind::none) != is_alternating(ds)) return at(n) + ": Christoffel iff alternating fails";
    if (!is_christoffel_conjugate(w)) return at(n) + ": circular-factor test rejects a conjugate";
  }
  return std::nullopt;
}

std::size_t direct_period(const BinaryWord& w) {
  for (std::size_t p = 1; p < w.size(); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < w.size() && ok; ++i) ok = w[i] == w[i + p];
    if (ok) return p;
  }
  return w.size();
}

Outcome check_borders(const OstrowskiSystem& sys) {
  const Integer q = top_denominator(sys);
  const Integer q_prev = sys.denominator(static_cast<int>(sys.size()) - 1);
  for (Integer n = 0; n < q; ++n) {
    const BinaryWord w = h_word(sys, n);
    const BorderResult oracle = longest_border_bruteforce(w);
    const BorderResult closed = longest_border_closed(sys, n);
    const BorderResult theorem = longest_border_theorem(greedy(sys, n));
    if (closed.border != oracle.border) return at(n) + ": closed form differs from brute force";
    if (theorem.border != oracle.border) return at(n) + ": case analysis differs from brute force";
    if ((n == q_prev - 1 || n == q - 1) && oracle.border) return at(n) + ": Christoffel index has a border";
    if (oracle.period != direct_period(w) || smallest_period(w) != oracle.period) return at(n) + ": period mismatch";
    for (const BinaryWord& b : all_borders(w)) {
      const BinaryWord root = primitive_root(b);
      if (!is_christoffel_conjugate(root)) return at(n) + ": border " + b.str() + " is not a power of a conjugate";
      if (root.power(b.size() / root.size()) != b) return at(n) + ": primitive root does not generate " + b.str();
    }
  }
  return std::nullopt;
}

Outcome check_affixes(const OstrowskiSystem& sys) {
  const std::size_t m = sys.size();
  return sweep_legal(sys, [&](const DigitString& ds) -> Outcome {
    const VSequence v(ds);
    for (std::size_t k = 0; k < m; ++k) {
      const CommonAffixes c = common_affixes(ds, k);
      const int ki = static_cast<int>(k);
      if (!c.factorizations_hold) return at(ds) + ": W Z X factorization fails at k=" + std::to_string(k);
      if (Integer(c.prefix.size() + c.suffix.size()) != sys.denominator(ki + 1) + sys.denominator(ki) - 2) {
        return at(ds) + ": w_k + x_k length identity fails";
      }
      const BinaryWord xw = c.suffix + c.prefix;
      if (!xw.is_palindrome()) return at(ds) + ": X_k W_k is not a palindrome";
      if (!is_rotation_of(BinaryWord("a") + xw + BinaryWord("b"), BinaryWord("b") + xw + BinaryWord("a"))) {
        return at(ds) + ": a X_k W_k b and b X_k W_k a are not conjugate";
      }
      const BinaryWord& next = v.at(ki + 1);
      const BinaryWord& cur = v.at(ki);
      if (next.is_prefix_of(cur + next) && ds.digit(k + 1) != 0) return at(ds) + ": prefix criterion fails";
      if (next.is_suffix_of(next + cur) && ds.digit(k + 1) != sys.bound(k + 1)) return at(ds) + ": suffix criterion fails";
    }
    if (is_greedy(ds)) {
      const int mi = static_cast<int>(m);
      const bool christoffel_top = is_alternating(ds) && ds.digit(m) == sys.bound(m);
      if (v.at(mi - 1).is_prefix_of(v.at(mi)) == christoffel_top) return at(ds) + ": V_{m-1} prefix criterion fails";
      if (m >= 2) {
        const bool not_prefix = !v.at(mi - 1).is_prefix_of(v.at(mi - 2) + v.at(mi - 1));
        // As stated the criterion needs d_{m-1} = 0; otherwise V_{m-1} is never
        // a prefix, in line with the prefix criterion above.
        const bool expected = ds.digit(m - 1) != 0 || is_alternating(sys, std::span<const Integer>(ds.digits()).first(m - 1));
        if (not_prefix != expected) return at(ds) + ": V_{m-1} in V_{m-2} V_{m-1} criterion fails";
      }
    }
    return std::nullopt;
  });
}

Outcome check_graphs(const OstrowskiSystem& sys) {
  if (sys.size() < 2) return std::nullopt;
  const CompactGraph g = compact_graph(sys);
  const BinaryWord p = central_word(sys);
  const Integer q = top_denominator(sys);
  Integer vertex_total = 1;
  for (const Integer& c : sys.central_exponents()) vertex_total += c;
  if (Integer(g.vertices.size()) != vertex_total) return "vertex count differs from c1 + ... + cm + 1";
  for (const auto& vertex : g.vertices) {
    const auto out = g.out_edges(vertex.id);
    if (out.size() > 2) return "vertex with out-degree above two";
    if (out.size() == 2 && g.label_word(g.edges[out[0]].label_index).front() ==
                               g.label_word(g.edges[out[1]].label_index).front()) {
      return "out-edges share a first letter";
    }
  }
  std::set<BinaryWord> words;
  std::set<Integer> lengths;
  const auto paths = enumerate_origin_paths(g);
  for (const auto& path : paths) {
    const BinaryWord w = path_word(g, path);
    const Integer n = path_length(g, path);
    if (!w.is_suffix_of(p)) return "path label " + w.str() + " is not a suffix of p";
    if (Integer(w.size()) != n) return "path length label differs from its word length";
    words.insert(w);
    lengths.insert(n);
    if (n > q - 2) return "path length beyond q_m - 2";
    if (path_label_counts(g, path) != lazy(sys, n).digits()) return at(n) + ": path label counts are not the lazy digits";
  }
  if (paths.size() != p.size() + 1 || words.size() != paths.size() || lengths.size() != paths.size()) {
    return "origin paths are not in bijection with the suffixes";
  }
  for (std::size_t len = 0; len <= p.size(); ++len) {
    const BinaryWord s = p.suffix(len);
    if (path_word(g, path_for_suffix(g, s)) != s) return "path_for_suffix fails on " + s.str();
    if (path_for_length(g, Integer(len)) != path_for_suffix(g, s)) return "path_for_length fails at " + std::to_string(len);
  }

  const Automaton aut = expand_to_automaton(g);
  if (aut.state_count() != p.size() + 1) return "automaton has " + std::to_string(aut.state_count()) + " states";
  if (!is_deterministic(aut) || !is_homogeneous(aut)) return "automaton is not deterministic and homogeneous";
  std::set<BinaryWord> suffixes;
  for (std::size_t len = 0; len <= p.size(); ++len) suffixes.insert(p.suffix(len));
  if (accepted_language(aut) != suffixes) return "automaton language differs from the suffix set";
  if (!isomorphic(compact_automaton(aut), to_automaton(g))) return "compaction does not recover the compact graph";
  tree_embedding(sys);
  return std::nullopt;
}

}  // namespace

std::vector<NamedCheck> standard_checks() {
  return {
      {"continuants", check_continuants},
      {"numeration", check_numeration},
      {"conjugates", check_conjugates},
      {"free-group", check_free_group},
      {"standard-words", check_standard_words},
      {"christoffel", check_christoffel},
      {"borders", check_borders},
      {"affixes", check_affixes},
      {"graphs", check_graphs},
  };
}

std::vector<OstrowskiSystem> systems_up_to(std::size_t max_m, const Integer& max_a) {
  std::vector<OstrowskiSystem> out;
  if (max_a < 1) return out;
  for (std::size_t m = 1; m <= max_m; ++m) {
    std::vector<Integer> alphas(m, Integer(1));
    while (true) {
      out.emplace_back(alphas);
      std::size_t i = m;
      while (i > 0 && alphas[i - 1] == max_a) {
        alphas[i - 1] = 1;
        --i;
      }
      if (i == 0) break;
      alphas[i - 1] += 1;
    }
  }
  return out;
}

VerifyReport run_verification(const VerifyOptions& options, const std::vector<NamedCheck>& extra) {
  std::vector<NamedCheck> checks = standard_checks();
  checks.insert(checks.end(), extra.begin(), extra.end());
  const std::vector<OstrowskiSystem> systems = systems_up_to(options.max_m, options.max_a);

  std::vector<std::vector<Outcome>> outcomes(systems.size(), std::vector<Outcome>(checks.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s = next++; s < systems.size(); s = next++) {
      for (std::size_t c = 0; c < checks.size(); ++c) {
        try {
          outcomes[s][c] = checks[c].run(systems[s]);
        } catch (const std::exception& e) {
          outcomes[s][c] = std::string("exception: ") + e.what();
        }
      }
    }
  };
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(systems.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyReport report;
  report.systems = systems.size();
  for (const auto& c : checks) report.tallies.push_back({c.name, 0, 0});
  for (std::size_t s = 0; s < systems.size(); ++s) {
    for (std::size_t c = 0; c < checks.size(); ++c) {
      if (!outcomes[s][c]) {
        ++report.tallies[c].passed;
        continue;
      }
      ++report.tallies[c].failed;
      if (!report.first_failure) report.first_failure = CheckFailure{checks[c].name, to_string(systems[s]), *outcomes[s][c]};
    }
  }
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "systems: " << report.systems << "\n";
  for (const auto& t : report.tallies) {
    out << "  " << t.name << ": " << t.passed << " passed, " << t.failed << " failed\n";
  }
  if (report.first_failure) {
    const CheckFailure& f = *report.first_failure;
    out << "first counterexample: " << f.check << " on " << f.system << ": " << f.detail << "\n";
    out << "FAIL\n";
  } else {
    out << "PASS\n";
  }
  return out.str();
}

}  // namespace christoffel
