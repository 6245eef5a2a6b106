#pragma once

#include <string>
#include <vector>

#include "nonstatic/scenario.hpp"

namespace nonstatic::cli {

enum class CheckStatus { kPass, kFail, kSkip, kInfo };
const char* to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string name;
  double value = 0.0;      // observed worst-case deviation (or the reported quantity)
  double tolerance = 0.0;  // already multiplied by tol-scale
  CheckStatus status = CheckStatus::kInfo;
};

/// Runs the invariant suite for the scenario's parameters and amplitude over
/// its time window. Grid-based checks use the scenario's q and p grids.
std::vector<CheckResult> validate_scenario(const Scenario& s);

}  // namespace nonstatic::cli
