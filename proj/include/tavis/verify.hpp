#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tavis {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  /// Multiplies every closed-form Rabi frequency; 1 for a real run.
  double rabi_scale = 1.0;
  std::uint64_t seed = 20111004;
  int parameter_points = 60;
  bool include_spectrum = true;
};

/// Runs the closed-form-vs-numerics oracle checks and the master-equation
/// invariants. Each check reports what it measured against its tolerance.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);

/// {"passed": ..., "options": {...}, "checks": [...]}
std::string verification_report_json(const std::vector<CheckResult>& checks, const VerifyOptions& options);

}  // namespace tavis
