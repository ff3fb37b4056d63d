#pragma once

// Property suites over generated ensembles. Trial t draws everything from
// derive_seed(seed, t), so a suite's output depends only on its options.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sipoly {

struct SuiteOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  bool exact = false;
  /// Inertia zero threshold override (float mode).
  std::optional<double> tol;
};

struct TrialFailure {
  int trial = 0;
  std::string reason;
  /// CLI invocations that reproduce the failing computation.
  std::vector<std::string> replay;
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  int passed = 0;
  std::vector<TrialFailure> failures;

  bool ok() const { return passed == trials; }
};

/// theorem1, theorem3, cohn, interlace4, markov5, pencil6, identity-sec1,
/// borchardt, hermite, mobius.
const std::vector<std::string>& suite_names();

/// Runs trials 0..trials-1 in order. Throws DomainError for an unknown
/// suite. Exceptions inside a trial are recorded as failures of that trial.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts);

/// "PASS k/k" or "FAIL passed/k" followed by one block per failure.
std::string format_report(const SuiteReport& report);

}  // namespace sipoly
