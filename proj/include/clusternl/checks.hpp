#pragma once

#include <string>
#include <vector>

namespace clusternl {

struct CheckResult {
  std::string name;
  std::string detail;  // computed vs expected, for the report table
  bool pass;
};

// Full desk-scale reproduction of the published figures of merit. The
// perturb flag injects a deliberate amplitude error into the cluster states
// so the eigenvalue checks fail (negative control).
std::vector<CheckResult> run_acceptance_checks(bool perturb = false);

}  // namespace clusternl
