#pragma once

#include <string>
#include <vector>

namespace wigner::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double observed = 0.0;   // worst residual / error seen
  double tolerance = 0.0;  // the pinned acceptance threshold
  double seconds = 0.0;
  std::string detail;
};

// Runs every acceptance criterion at its pinned parameters. The seed
// feeds the randomized identity sweeps only; everything else is fixed.
std::vector<CriterionResult> run_all(unsigned seed = 42);

bool all_pass(const std::vector<CriterionResult>& results);

// One line per criterion: "[PASS] 3 poly-equivalence ...".
std::string format_line(const CriterionResult& r);

}  // namespace wigner::acceptance
