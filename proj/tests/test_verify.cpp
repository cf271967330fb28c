#include "doctest.h"
#include "lqw/coin.hpp"
#include "lqw/verify.hpp"

using namespace lqw;

TEST_CASE("fast verification checks pass on a fresh build") {
  CHECK(check_coin_algebra().passed);
  CHECK(check_dense_oracle_equivalence().passed);
  CHECK(check_mirror_symmetry().passed);
  CHECK(check_hitting_purestate_vs_density().passed);
  CHECK(check_classical_closed_forms().passed);
}

TEST_CASE("negative control: a perturbed coin is caught by the diagnostics") {
  CoinMatrix coin = build_grover_coin({2, 1.5});
  coin(0, 0) += 1e-6;
  CHECK(max_unitarity_deviation(coin) > 1e-8);
  CHECK(max_involution_deviation(coin) > 1e-8);
}

TEST_CASE("report formatting lists one line per check") {
  std::vector<CheckResult> results;
  results.push_back({"alpha", true, 1e-13, 1e-10, 0.01, ""});
  results.push_back({"beta", false, 2e-3, 1e-10, 0.02, "worst at l=1"});
  const std::string report = format_report(results);
  CHECK(report.find("[PASS] alpha") != std::string::npos);
  CHECK(report.find("[FAIL] beta") != std::string::npos);
  CHECK(report.find("worst at l=1") != std::string::npos);
  CHECK_FALSE(all_passed(results));
  results.pop_back();
  CHECK(all_passed(results));
}
