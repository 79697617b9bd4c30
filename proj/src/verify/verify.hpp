#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kwise::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  /// Wall-clock limit in seconds; 0 when the criterion has none.
  double limit_seconds = 0;
};

struct SuiteOptions {
  int threads = 1;
  std::uint64_t seed = 1;
};

/// Acceptance criteria 1..10.
std::vector<int> criterion_ids();
CriterionResult run_criterion(int id, const SuiteOptions& options = {});

/// Seeded random instances of the polynomial checkers (not an acceptance
/// criterion; reported with id 0).
CriterionResult random_polynomial_checks(int count, std::uint64_t seed);

/// "all", "poly", or a comma-separated list of criterion ids.
/// Throws std::invalid_argument on an unknown suite name.
std::vector<CriterionResult> run_suite(const std::string& suite, const SuiteOptions& options = {},
                                       const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace kwise::verify
