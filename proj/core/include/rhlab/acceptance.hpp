#pragma once

#include <string>
#include <vector>

namespace rhlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1-based id).  A criterion passes only if
/// every check holds at its pinned tolerance and it finishes inside its
/// time limit.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance_suite();

/// "[PASS] 3 Title (0.01 s / 1 s): detail"
std::string format_result(const CriterionResult& result);

}  // namespace rhlab
