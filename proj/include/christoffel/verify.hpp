// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "christoffel/arith.hpp"
#include "christoffel/ostrowski.hpp"

namespace christoffel {

/// A property checked once per system. Returns nullopt on success, or a
/// description of the first counterexample found.
struct NamedCheck {
  std::string name;
  std::function<std::optional<std::string>(const OstrowskiSystem&)> run;
};

/// The built-in property sweeps, in reporting order.
std::vector<NamedCheck> standard_checks();

/// All systems (a1, ..., am) with 1 <= m <= max_m and 1 <= ai <= max_a, in
/// increasing length, then lexicographic order.
std::vector<OstrowskiSystem> systems_up_to(std::size_t max_m, const Integer& max_a);

struct VerifyOptions {
  std::size_t max_m = 3;
  Integer max_a = 3;
  /// 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct CheckFailure {
  std::string check;
  std::string system;
  std::string detail;
};

struct VerifyReport {
  std::size_t systems = 0;
  std::vector<CheckTally> tallies;
  /// The failure on the earliest system in sweep order; ties go to the
  /// earlier check.
  std::optional<CheckFailure> first_failure;

  [[nodiscard]] bool ok() const noexcept { return !first_failure; }
};

/// Runs standard_checks() followed by extra over every system in range.
/// Systems are spread over worker threads; the report does not depend on the
/// thread count.
VerifyReport run_verification(const VerifyOptions& options, const std::vector<NamedCheck>& extra = {});

/// Human-readable report ending in PASS or FAIL.
std::string format_report(const VerifyReport& report);

}  // namespace christoffel
