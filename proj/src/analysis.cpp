#include "lqw/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace lqw {

namespace {

void validate(const AnalyticMeanParams& params) {
  if (!std::isfinite(params.alpha) || params.alpha < 0.0) {
    throw std::invalid_argument("alpha must be finite and >= 0");
  }
  if (!(params.loop_weight > 1.0) || !std::isfinite(params.loop_weight)) {
    throw std::invalid_argument("the large-l mean-position model requires loop_weight > 1");
  }
  if (params.steps < 1) {
    throw std::invalid_argument("steps must be >= 1");
  }
}

}  // namespace

double analytic_mean_position(const AnalyticMeanParams& params) {
  validate(params);
  const double a = params.alpha;
  const double l = params.loop_weight;
  const double t = params.steps;
  return (t - 4.0 * std::sqrt(a) * t / std::sqrt(l) +
          (a * (2.0 * t * t + 2.0 * t) + 2.0 * t * t - 4.0 * t) / l) /
         (a + 1.0);
}

double analytic_mean_position_truncated(const AnalyticMeanParams& params) {
  validate(params);
  const double a = params.alpha;
  const double l = params.loop_weight;
  const double t = params.steps;
  const double r = (l - 1.0) / (l + 1.0);
  const double first = std::pow(r, 2.0 * t) * t / (a + 1.0);
  const double second =
      -std::pow(r, 2.0 * t - 1.0) * 4.0 * t * std::sqrt(l * a) / ((l + 1.0) * (a + 1.0));
  const double coupling = 2.0 * std::sqrt(l) / (l + 1.0);
  const double third = std::pow(r, 2.0 * t - 2.0) * coupling * coupling *
                       (a * t * t + a * t + t * t - t) / (2.0 * (a + 1.0));
  return first + second + third;
}

bool analytic_mean_in_validity_range(const AnalyticMeanParams& params) {
  return params.loop_weight >= 10.0;
}

ScalingLaw quantum_asymptotic_mean(RegimeSize alpha_regime, RegimeSize l_regime) {
  if (alpha_regime == RegimeSize::kSmall) {
    return l_regime == RegimeSize::kSmall ? ScalingLaw{1.0, 0.0} : ScalingLaw{2.0, 0.0};
  }
  return l_regime == RegimeSize::kSmall ? ScalingLaw{1.0, 0.5} : ScalingLaw{2.0, -1.0};
}

ScalingLaw classical_asymptotic_mean(RegimeSize l_regime) {
  return l_regime == RegimeSize::kSmall ? ScalingLaw{1.0, 0.0} : ScalingLaw{1.0, -1.0};
}

PowerLawFit fit_scaling_exponent(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 4) {
    throw std::invalid_argument("exponent fit needs at least 4 samples");
  }
  double x_min = samples.front().first;
  double x_max = samples.front().first;
  for (const auto& [x, y] : samples) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument("exponent fit needs strictly positive samples");
    }
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
  }
  if (x_max < 10.0 * x_min * (1.0 - 1e-12)) {
    throw std::invalid_argument("exponent fit window must span at least one decade");
  }

  const size_t n = samples.size();
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : samples) {
    sx += std::log(x);
    sy += std::log(y);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : samples) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  PowerLawFit fit;
  fit.samples = n;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss_res = 0.0;
  for (const auto& [x, y] : samples) {
    const double r = std::log(y) - (fit.intercept + fit.exponent * std::log(x));
    ss_res += r * r;
  }
  if (n > 2) {
    fit.residual_se = std::sqrt(ss_res / (n - 2));
    fit.exponent_se = fit.residual_se / std::sqrt(sxx);
  }
  return fit;
}

RegimeReport regime_report(int steps, double loop_weight) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!(loop_weight > 0.0)) throw std::invalid_argument("loop_weight must be > 0");
  RegimeReport report;
  report.t_star = steps / std::sqrt(loop_weight);
  report.l_star = static_cast<double>(steps) * steps;
  if (std::abs(report.t_star - 1.0) < 0.1) {
    report.regime = ScalingRegime::kBoundary;
  } else if (report.t_star < 1.0) {
    report.regime = ScalingRegime::kInverseSqrt;
  } else {
    report.regime = ScalingRegime::kInverse;
  }
  return report;
}

RegimeReport regime_report_with_fit(int steps, double loop_weight,
                                    const std::vector<std::pair<double, double>>& samples) {
  RegimeReport report = regime_report(steps, loop_weight);
  report.fit = fit_scaling_exponent(samples);
  double lo = samples.front().first;
  double hi = samples.front().first;
  for (const auto& [x, y] : samples) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  report.fit_window = {lo, hi};
  return report;
}

std::pair<double, double> left_fit_window(double l_star) { return {l_star / 100.0, l_star / 10.0}; }

std::pair<double, double> right_fit_window(double l_star) { return {100.0 * l_star, 1e4 * l_star}; }

}  // namespace lqw
