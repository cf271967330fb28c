#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lqw/evolve.hpp"

namespace lqw {

inline constexpr double kDefaultHittingEpsilon = 1e-6;
inline constexpr long kDefaultMaxHittingSteps = 10'000'000;

/// Walk interleaved with a projective measurement onto the absorbing sites.
struct MeasuredWalk {
  WalkConfig config;               // steps field is ignored; the run is open-ended
  std::vector<int> absorbing_sites;
  double epsilon = kDefaultHittingEpsilon;
  long max_steps = kDefaultMaxHittingSteps;
};

void validate(const MeasuredWalk& walk);

/// First-crossing series p(1..T) and the truncated mean hitting time
/// tau_est = sum t*p(t). residual = 1 - sum p(t) <= epsilon on success.
struct HittingResult {
  std::vector<double> first_crossing;
  long truncation_time = 0;
  double tau_est = 0.0;
  double residual = 1.0;
};

/// Raised when the cumulative first-crossing probability fails to reach
/// 1-epsilon within max_steps (walker trapped, or epsilon too small).
class MaxStepsExceeded : public std::runtime_error {
 public:
  MaxStepsExceeded(long steps, double captured)
      : std::runtime_error("hitting run exceeded " + std::to_string(steps) +
                           " steps with captured probability " + std::to_string(captured)),
        steps_(steps),
        captured_(captured) {}
  long steps() const { return steps_; }
  double captured() const { return captured_; }

 private:
  long steps_;
  double captured_;
};

/// Measured-walk recursion on the pure state: each step applies U, records
/// p(t) = |P U psi|^2 and keeps the unnormalized survivor psi -> Q U psi.
HittingResult first_crossing_series(const MeasuredWalk& walk);

/// sum t*p(t) over the stored series.
double mean_hitting_time(const HittingResult& result);

enum class RowStatus { kOk, kMaxStepsExceeded };

struct HittingSweepCell {
  double tau_est = 0.0;
  long truncation_time = 0;
  double residual = 1.0;
  RowStatus status = RowStatus::kOk;
};

struct HittingSweepRow {
  double loop_weight = 0.0;
  std::vector<HittingSweepCell> quantum;  // one per alpha mode
  HittingSweepCell classical;
};

/// Quantum and classical mean hitting times per loop weight, rows in the
/// given l order. Failed cells are flagged and the sweep continues. Rows are
/// computed on `jobs` worker threads; results are deterministic and ordered.
std::vector<HittingSweepRow> hitting_sweep(const Topology& topology,
                                           const std::vector<AlphaMode>& alphas,
                                           const std::vector<double>& loop_weights,
                                           double epsilon, int jobs = 1,
                                           long max_steps = kDefaultMaxHittingSteps);

}  // namespace lqw
