#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fgerbe {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::int64_t checks = 0;
  double max_residual = 0.0;       // over tolerance-based checks
  std::vector<std::string> failures;
  std::vector<std::string> notes;  // reported observations that do not affect pass/fail
  bool pass() const { return failures.empty(); }
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1..10) over the core instance suite.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// "criterion 3 PASS  <title>  checks=.. max_residual=.." plus the first failures.
std::string format_result(const CriterionResult& r);

}  // namespace fgerbe
