#pragma once

#include <string>
#include <vector>

namespace quotbn {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the exact-identity and property acceptance checks (relation
/// derivation, rank/codimension grids, genus-1 anchors, oracle
/// cross-checks, lab round trips, stratum dimensions, existence table).
/// Oracles here are independent routes: Laplace expansion for determinants,
/// direct series division for the Todd expansion.
std::vector<CriterionResult> run_primary_criteria();

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace quotbn
