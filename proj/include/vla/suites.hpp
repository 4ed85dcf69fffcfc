#ifndef VLA_SUITES_HPP
#define VLA_SUITES_HPP

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vla {

/// Budgets for a verification suite.  Fields left at -1 take the suite's own
/// default (see suite_catalog()).
struct SuiteOptions {
  std::uint64_t seed = 1;
  int samples = -1;
  int max_lambda = -1;
  int max_k = -1;
  int range = -1;
};

struct SuiteFailure {
  std::string description;
  nlohmann::json witness;  // replayable: options, seed and concrete inputs
};

struct SuiteReport {
  std::string suite;
  long long cases = 0;
  std::vector<SuiteFailure> failures;
  double elapsed_seconds = 0.0;
  bool passed() const { return failures.empty(); }
  /// Canonical JSON; elapsed time is excluded so identical flags and seed
  /// produce byte-identical reports (it goes to stderr as a diagnostic).
  nlohmann::json to_json() const;
};

struct SuiteInfo {
  const char* name;
  const char* checks;  // one-line description of the identity the suite runs
  int samples, max_lambda, max_k, range;  // defaults
};

std::span<const SuiteInfo> suite_catalog();

/// Runs one of the named suites.  Throws Error for an unknown name or an
/// invalid budget.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace vla

#endif
