#pragma once

// The acceptance suite A1-A12 as callable checks shared by the CLI and the test binary.

#include <string>
#include <vector>

#include "ajack/check.hpp"

namespace ajack {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  /// Passed sub-checks over total, then the first failure or a summary figure.
  std::string detail;
  double seconds = 0;
  std::vector<IdentityCheck> checks;
};

/// "A1" .. "A12".
std::vector<std::string> criterion_ids();

/// Runs one criterion. `quick` lowers the series orders; the tolerances never change.
/// Throws std::invalid_argument for an unknown id.
CriterionResult run_criterion(const std::string& id, bool quick = false);

/// All criteria; quick mode runs A1-A11.
std::vector<CriterionResult> run_acceptance(bool quick = false);

}  // namespace ajack
