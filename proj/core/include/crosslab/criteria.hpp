#ifndef CROSSLAB_CRITERIA_HPP
#define CROSSLAB_CRITERIA_HPP

#include <string>
#include <vector>

namespace crosslab {

// One line of the reproduction battery.  `detail` carries either the
// scope that was checked ("24 drawings") or the first failure found.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

// Runs the twelve-part reproduction battery over a deterministic corpus:
// convex drawings, both stock constructions up to n = 14, and 200 seeded
// random 2-page drawings.  Everything is exact except the seeded
// Monte-Carlo mean, whose tolerance is part of the criterion.  An
// exception inside a criterion fails that criterion, never the run.
// Takes a few minutes; criteria are independent and ordered by id.
std::vector<CriterionResult> run_reproduction_suite();

} // namespace crosslab

#endif
