#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace lqw {

/// Inputs of the closed-form large-l mean-position model for the directed
/// line. Intended validity is loop_weight >> 1; see
/// analytic_mean_in_validity_range.
struct AnalyticMeanParams {
  double alpha = 0.0;     // >= 0, finite
  double loop_weight = 0.0;  // > 1 required by the model
  int steps = 1;          // t >= 1
};

/// Large-l mean position on the directed line:
///   ( t - 4 sqrt(alpha) t / sqrt(l) + [alpha(2t^2+2t) + 2t^2 - 4t] / l ) / (alpha+1).
/// Throws std::invalid_argument for loop_weight <= 1.
double analytic_mean_position(const AnalyticMeanParams& params);

/// Variant that keeps the ((l-1)/(l+1))^(2t)-type prefactors of the three
/// retained series terms; degrades more gracefully at moderate l.
double analytic_mean_position_truncated(const AnalyticMeanParams& params);

/// The model is quoted for large loop weight; below 10 treat values as
/// indicative only.
bool analytic_mean_in_validity_range(const AnalyticMeanParams& params);

// ---- asymptotic scaling laws ----

enum class RegimeSize { kSmall, kLarge };  // parameter << 1 vs >> 1

/// (t-exponent, l-exponent) of the mean position in the four quantum
/// regimes: (1,0), (2,0) for small alpha; (1,1/2), (2,-1) for large alpha.
struct ScalingLaw {
  double t_exponent = 0.0;
  double l_exponent = 0.0;
};
ScalingLaw quantum_asymptotic_mean(RegimeSize alpha_regime, RegimeSize l_regime);

/// Classical rows: (1,0) for small l, (1,-1) for large l.
ScalingLaw classical_asymptotic_mean(RegimeSize l_regime);

// ---- log-log exponent fitting ----

struct PowerLawFit {
  double exponent = 0.0;   // slope of log(y) vs log(x)
  double intercept = 0.0;  // in log space
  double exponent_se = 0.0;
  double residual_se = 0.0;
  size_t samples = 0;
};

/// Ordinary least squares on (log x, log y). Requires >= 4 samples, strictly
/// positive values, and an x-window spanning at least one decade.
PowerLawFit fit_scaling_exponent(const std::vector<std::pair<double, double>>& samples);

// ---- regime classification ----

enum class ScalingRegime { kInverseSqrt, kInverse, kBoundary };

struct RegimeReport {
  double t_star = 0.0;  // t / sqrt(l)
  double l_star = 0.0;  // t^2
  ScalingRegime regime = ScalingRegime::kBoundary;
  std::optional<PowerLawFit> fit;                      // filled when a fit accompanies the report
  std::optional<std::pair<double, double>> fit_window;
};

/// Classifies by t_star with threshold 1; |t_star - 1| < 0.1 is reported as
/// the boundary band instead of forcing a side.
RegimeReport regime_report(int steps, double loop_weight);

/// Same, with a log-log fit over the given (l, mean) samples attached.
RegimeReport regime_report_with_fit(int steps, double loop_weight,
                                    const std::vector<std::pair<double, double>>& samples);

/// Default fit windows clear of the crossover at l* = t^2:
/// [l*/100, l*/10] on the left, [100 l*, 10^4 l*] on the right.
std::pair<double, double> left_fit_window(double l_star);
std::pair<double, double> right_fit_window(double l_star);

}  // namespace lqw
