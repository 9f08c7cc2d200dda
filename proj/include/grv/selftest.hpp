#pragma once

#include <string>
#include <vector>

namespace grv {

struct SelftestCheck {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Worst observed residual against the check's tolerance.
  double worst = 0.0;
  double tolerance = 0.0;
};

/// Invariant suites for the special-function kernel and the quadrature engine.
std::vector<SelftestCheck> run_selftest();

}  // namespace grv
