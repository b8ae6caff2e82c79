// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "christoffel/arith.hpp"
#include "christoffel/binary_word.hpp"
#include "christoffel/ostrowski.hpp"

namespace christoffel {

/// Symbolic description of a longest border as base^exponent.
struct BorderStructure {
  enum class Base {
    previous,                   // V_{m-1}
    second_previous,            // V_{m-2}
    previous_power_then_second, // V_{m-1}^{b_m - 1} V_{m-2}
    rotated_standard,           // H_N(alphas)
  };

  Base base = Base::previous;
  Integer exponent = 1;
  /// The system the base is computed in. For the theorem this is the system
  /// the case analysis ran on (after reductions); for the closed form it is
  /// the argument list of H_N.
  std::vector<Integer> alphas;
  /// Digits the V-words were built from (theorem only).
  std::vector<Integer> digits;
  /// "(i)" ... "(vii)" for the theorem, "(a1)", "(a2)", "(b1)", "(b2)" for the
  /// closed form.
  std::string rule;
};

/// "V_{m-1}^2 by (iii) on alphas=[2,1,3]" and similar.
std::string to_string(const BorderStructure& s);

struct BorderResult {
  std::optional<BinaryWord> border;
  std::optional<BorderStructure> structure;
  /// |w| - |border|, or |w| without a border.
  std::size_t period = 0;
  /// The queried word is a Christoffel word (only set by the closed-form and
  /// theorem paths, which know this without scanning).
  bool christoffel = false;
  /// Normalizations applied before the case analysis, outermost first.
  std::vector<std::string> reductions;
};

/// Tries border lengths |w| - 1, ..., 1 and keeps the first match.
/// Throws std::invalid_argument on the empty word.
BorderResult longest_border_bruteforce(const BinaryWord& w);

/// Longest border of V_m(ds) by the seven-case analysis, for greedy ds.
/// Christoffel inputs report no border. Systems with m = 1, or m = 2 with
/// b1 = 0, are first rewritten into an equivalent shape the case analysis
/// covers; the rewrites are listed in BorderResult::reductions.
/// Throws std::invalid_argument on non-greedy digits and std::logic_error if
/// no case applies.
BorderResult longest_border_theorem(const DigitString& ds);

/// Longest border of H_N(a1, ..., am) by the closed form with the step
/// function t. Throws std::out_of_range unless 0 <= N <= q_m - 1.
BorderResult longest_border_closed(const OstrowskiSystem& sys, const Integer& n);

/// H_N for a possibly empty argument list; the empty list gives the word a.
BinaryWord rotated_standard(const std::vector<Integer>& alphas, const Integer& n);

/// Every border of w, longest first.
std::vector<BinaryWord> all_borders(const BinaryWord& w);

/// |w| - |longest border|. Throws std::invalid_argument on the empty word.
std::size_t smallest_period(const BinaryWord& w);

/// Longest common prefix W_k and suffix X_k of V_{k+1} V_k and V_k V_{k+1},
/// built from their factored forms, with the separators between them.
struct CommonAffixes {
  BinaryWord prefix;          // W_k
  BinaryWord suffix;          // X_k
  BinaryWord separator_next;  // Z with V_{k+1} V_k = W_k Z X_k
  BinaryWord separator_prev;  // Z with V_k V_{k+1} = W_k Z X_k
  /// Both factorizations reproduce the products letter for letter.
  bool factorizations_hold = false;
};

/// Requires legal digits and 0 <= k <= m - 1; throws std::invalid_argument
/// and std::out_of_range respectively.
CommonAffixes common_affixes(const DigitString& ds, std::size_t k);

}  // namespace christoffel
