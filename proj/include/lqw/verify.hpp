#pragma once

#include <string>
#include <vector>

namespace lqw {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  std::string detail;
};

/// Individual checks. Each returns a populated CheckResult and never throws
/// on a numerical failure (failures are reported in the result).
CheckResult check_coin_algebra();
CheckResult check_dense_oracle_equivalence();
CheckResult check_unitarity_random_configs(unsigned seed = 20240901u);
CheckResult check_mirror_symmetry();
CheckResult check_hitting_purestate_vs_density();
CheckResult check_classical_closed_forms();
CheckResult check_scaling_table();
CheckResult check_analytic_mean_agreement();

/// The full suite, in a fixed order.
std::vector<CheckResult> run_verification_suite(unsigned seed = 20240901u);

/// One line per check: "[PASS] name  max dev 1.2e-13 (tol 1e-10)  0.05s".
std::string format_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace lqw
