#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "lqw/analysis.hpp"
#include "lqw/evolve.hpp"

using namespace lqw;

namespace {

double ring_mean(double l, const AlphaMode& alpha, int steps) {
  const WalkConfig config = make_walk_config(DirectedRing{steps + 2}, l, alpha, steps);
  return mean_position(position_distribution(evolve(config)), config.topology);
}

}  // namespace

TEST_CASE("analytic mean: domain and limits") {
  CHECK_THROWS_AS(analytic_mean_position({0.0, 1.0, 50}), std::invalid_argument);
  CHECK_THROWS_AS(analytic_mean_position({0.0, 0.5, 50}), std::invalid_argument);
  CHECK_THROWS_AS(analytic_mean_position({-1.0, 100.0, 50}), std::invalid_argument);
  CHECK_THROWS_AS(analytic_mean_position({0.0, 100.0, 0}), std::invalid_argument);

  // alpha=0, l -> inf: mean approaches t
  CHECK(analytic_mean_position({0.0, 1e12, 50}) == doctest::Approx(50.0).epsilon(1e-6));
  // spot value: alpha=100, l=1e4, t=50
  CHECK(analytic_mean_position({100.0, 1e4, 50}) == doctest::Approx(81.48 / 101.0).epsilon(1e-12));

  CHECK(analytic_mean_in_validity_range({0.0, 100.0, 50}));
  CHECK_FALSE(analytic_mean_in_validity_range({0.0, 5.0, 50}));
}

TEST_CASE("analytic mean agrees with simulation deep in its domain") {
  for (double alpha : {0.0, 1.0, 100.0}) {
    for (double l : {1e5, 1e6}) {
      const double simulated = ring_mean(l, AlphaMode::finite(alpha), 50);
      const double analytic = analytic_mean_position({alpha, l, 50});
      CHECK(std::abs(analytic - simulated) / simulated < 0.05);
    }
  }
}

TEST_CASE("truncated variant tracks simulation more closely at moderate l") {
  for (double alpha : {0.0, 1.0}) {
    const double simulated = ring_mean(1e4, AlphaMode::finite(alpha), 50);
    const double plain = analytic_mean_position({alpha, 1e4, 50});
    const double truncated = analytic_mean_position_truncated({alpha, 1e4, 50});
    CHECK(std::abs(truncated - simulated) < std::abs(plain - simulated));
  }
  // the two variants converge for very large l
  CHECK(analytic_mean_position_truncated({1.0, 1e10, 30}) ==
        doctest::Approx(analytic_mean_position({1.0, 1e10, 30})).epsilon(1e-6));
}

TEST_CASE("analytic l-dependent part shows both decay laws at large alpha") {
  // deviation from the alpha -> inf plateau t/(alpha+1)
  const double alpha = 1e6;
  const int t = 100;
  const auto deviation = [&](double l) {
    return std::abs(analytic_mean_position({alpha, l, t}) - t / (alpha + 1.0));
  };
  // t* >> 1 (l << t^2): the 1/l term dominates
  {
    std::vector<std::pair<double, double>> samples;
    for (double l : {10.0, 20.0, 50.0, 100.0}) samples.emplace_back(l, deviation(l));
    CHECK(fit_scaling_exponent(samples).exponent == doctest::Approx(-1.0).epsilon(0.05));
  }
  // t* << 1 and l large enough that the sqrt term dominates
  {
    std::vector<std::pair<double, double>> samples;
    for (double l : {1e12, 1e13, 1e14, 1e15}) samples.emplace_back(l, deviation(l));
    CHECK(fit_scaling_exponent(samples).exponent == doctest::Approx(-0.5).epsilon(0.05));
  }
}

TEST_CASE("asymptotic scaling table") {
  CHECK(quantum_asymptotic_mean(RegimeSize::kSmall, RegimeSize::kSmall).t_exponent == 1.0);
  CHECK(quantum_asymptotic_mean(RegimeSize::kSmall, RegimeSize::kSmall).l_exponent == 0.0);
  CHECK(quantum_asymptotic_mean(RegimeSize::kSmall, RegimeSize::kLarge).t_exponent == 2.0);
  CHECK(quantum_asymptotic_mean(RegimeSize::kSmall, RegimeSize::kLarge).l_exponent == 0.0);
  CHECK(quantum_asymptotic_mean(RegimeSize::kLarge, RegimeSize::kSmall).l_exponent == 0.5);
  CHECK(quantum_asymptotic_mean(RegimeSize::kLarge, RegimeSize::kLarge).t_exponent == 2.0);
  CHECK(quantum_asymptotic_mean(RegimeSize::kLarge, RegimeSize::kLarge).l_exponent == -1.0);
  CHECK(classical_asymptotic_mean(RegimeSize::kSmall).l_exponent == 0.0);
  CHECK(classical_asymptotic_mean(RegimeSize::kLarge).l_exponent == -1.0);
  CHECK(classical_asymptotic_mean(RegimeSize::kLarge).t_exponent == 1.0);
}

TEST_CASE("exponent fit on exact power laws") {
  std::vector<std::pair<double, double>> samples;
  for (double x : {1.0, 3.0, 10.0, 30.0, 100.0}) samples.emplace_back(x, 7.0 / x);
  const PowerLawFit fit = fit_scaling_exponent(samples);
  CHECK(fit.exponent == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(fit.residual_se < 1e-12);
}

TEST_CASE("exponent fit input validation") {
  std::vector<std::pair<double, double>> too_few = {{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}};
  CHECK_THROWS_AS(fit_scaling_exponent(too_few), std::invalid_argument);
  std::vector<std::pair<double, double>> narrow = {{1.0, 1.0}, {2.0, 2.0}, {3.0, 3.0}, {4.0, 4.0}};
  CHECK_THROWS_AS(fit_scaling_exponent(narrow), std::invalid_argument);
  std::vector<std::pair<double, double>> negative = {
      {1.0, 1.0}, {2.0, -2.0}, {5.0, 3.0}, {10.0, 4.0}};
  CHECK_THROWS_AS(fit_scaling_exponent(negative), std::invalid_argument);
  // exactly one decade is accepted
  std::vector<std::pair<double, double>> decade = {{1.0, 1.0}, {2.0, 1.0}, {5.0, 1.0}, {10.0, 1.0}};
  CHECK(fit_scaling_exponent(decade).exponent == doctest::Approx(0.0));
}

TEST_CASE("regime report") {
  // boundary cases from the crossover l* = t^2
  {
    const RegimeReport report = regime_report(100, 1e4);
    CHECK(report.t_star == doctest::Approx(1.0));
    CHECK(report.l_star == doctest::Approx(1e4));
    CHECK(report.regime == ScalingRegime::kBoundary);
  }
  {
    const RegimeReport report = regime_report(10, 100.0);
    CHECK(report.t_star == doctest::Approx(1.0));
    CHECK(report.l_star == doctest::Approx(100.0));
    CHECK(report.regime == ScalingRegime::kBoundary);
  }
  {
    const RegimeReport report = regime_report(100, 1e8);
    CHECK(report.t_star == doctest::Approx(0.01));
    CHECK(report.regime == ScalingRegime::kInverseSqrt);
  }
  {
    const RegimeReport report = regime_report(100, 100.0);
    CHECK(report.t_star == doctest::Approx(10.0));
    CHECK(report.regime == ScalingRegime::kInverse);
  }
  CHECK_THROWS_AS(regime_report(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(regime_report(10, 0.0), std::invalid_argument);
}

TEST_CASE("regime report with attached fit") {
  std::vector<std::pair<double, double>> samples;
  for (double x : {100.0, 300.0, 1000.0, 3000.0}) samples.emplace_back(x, 2.0 / std::sqrt(x));
  const RegimeReport report = regime_report_with_fit(100, 300.0, samples);
  REQUIRE(report.fit.has_value());
  CHECK(report.fit->exponent == doctest::Approx(-0.5).epsilon(1e-10));
  REQUIRE(report.fit_window.has_value());
  CHECK(report.fit_window->first == doctest::Approx(100.0));
  CHECK(report.fit_window->second == doctest::Approx(3000.0));
}

TEST_CASE("default fit windows sit clear of the crossover") {
  const auto left = left_fit_window(1e4);
  CHECK(left.first == doctest::Approx(100.0));
  CHECK(left.second == doctest::Approx(1000.0));
  const auto right = right_fit_window(1e4);
  CHECK(right.first == doctest::Approx(1e6));
  CHECK(right.second == doctest::Approx(1e8));
}

TEST_CASE("small-alpha small-l cell: mean is flat in l on a log scale") {
  // the fitted l-exponent over l in [1e-3, 1e-1] at t=100 is ~ -0.07
  std::vector<std::pair<double, double>> samples;
  for (double exponent : {-3.0, -2.5, -2.0, -1.5, -1.0}) {
    const double l = std::pow(10.0, exponent);
    samples.emplace_back(l, ring_mean(l, AlphaMode::finite(0.0), 100));
  }
  const PowerLawFit fit = fit_scaling_exponent(samples);
  CHECK(std::abs(fit.exponent) < 0.1);
}
