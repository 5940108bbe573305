#pragma once

// Acceptance battery: one exact pass/fail verdict per criterion, with the
// instance counts, seeds and runtime limits fixed here.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cornerpoly {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;

  bool passed() const { return checks_passed && seconds < limit_seconds; }
};

struct SuiteOptions {
  std::vector<int> only;  // empty means every criterion
  std::uint64_t seed = 20240601;
};

/// Runs the selected criteria in order; `progress` sees each result as it completes.
std::vector<CriterionResult> run_acceptance(const SuiteOptions& options,
                                            const std::function<void(const CriterionResult&)>& progress = {});

std::string format_result(const CriterionResult& result);

}  // namespace cornerpoly
