// Acceptance gate: runs the twelve-part reproduction battery and prints one
// pass/fail line per criterion.  Exits nonzero when any criterion fails.

#include "crosslab/criteria.hpp"

#include <cstdio>

int main() {
  const std::vector<crosslab::CriterionResult> results =
      crosslab::run_reproduction_suite();
  int failed = 0;
  for (const crosslab::CriterionResult& r : results) {
    std::printf("[%s] criterion %2d: %s — %s\n", r.pass ? "PASS" : "FAIL",
                r.id, r.title.c_str(), r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
