#include <cstdio>

#include "rhlab/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : rhlab::run_acceptance_suite()) {
    std::printf("%s\n", rhlab::format_result(r).c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%d/%d criteria passed\n", rhlab::kCriterionCount - failed,
              rhlab::kCriterionCount);
  return failed == 0 ? 0 : 1;
}
