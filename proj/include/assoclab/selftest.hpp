#pragma once

// Built-in invariant suites, runnable from the command line.

#include <string>
#include <vector>

namespace assoclab {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Runs every module's invariant checks with series up to `max_order`
/// (capped at 5 for the expensive ones), plus the antisymmetrisation
/// oracle for the second- and third-order terms of the delta series.
std::vector<CheckResult> run_selftest(int max_order = 5);

}  // namespace assoclab
