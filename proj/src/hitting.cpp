#include "lqw/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lqw/classical.hpp"
#include "lqw/parallel.hpp"

namespace lqw {

void validate(const MeasuredWalk& walk) {
  validate(walk.config);
  if (!(walk.epsilon > 0.0 && walk.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0,1)");
  }
  if (walk.max_steps < 1) {
    throw std::invalid_argument("max_steps must be >= 1");
  }
  if (walk.absorbing_sites.empty()) {
    throw std::invalid_argument("absorbing set must be nonempty");
  }
  const int sites = site_count(walk.config.topology);
  for (int site : walk.absorbing_sites) {
    if (site < 0 || site >= sites) throw std::invalid_argument("absorbing site out of range");
    if (site == walk.config.start) {
      throw std::invalid_argument("absorbing set must not contain the start site");
    }
  }
}

HittingResult first_crossing_series(const MeasuredWalk& walk) {
  validate(walk);
  WalkConfig config = walk.config;
  config.steps = 0;
  WalkerState state = initial_state(config);
  const CoinMatrix coin = build_grover_coin(config.coin);
  const ShiftTable shift = build_shift_table(config.topology);

  HittingResult result;
  double captured = 0.0;
  double tau = 0.0;
  long t = 0;
  while (captured < 1.0 - walk.epsilon) {
    if (t >= walk.max_steps) throw MaxStepsExceeded(walk.max_steps, captured);
    ++t;
    step_in_place(state, coin, shift);
    const double arrived = absorb_sites(state, walk.absorbing_sites);
    captured += arrived;
    tau += static_cast<double>(t) * arrived;
    result.first_crossing.push_back(arrived);
  }
  result.truncation_time = t;
  result.tau_est = tau;
  result.residual = 1.0 - captured;
  return result;
}

double mean_hitting_time(const HittingResult& result) {
  double tau = 0.0;
  for (size_t i = 0; i < result.first_crossing.size(); ++i) {
    tau += static_cast<double>(i + 1) * result.first_crossing[i];
  }
  return tau;
}

namespace {

TargetSpec default_target(const Topology& topology) {
  return std::holds_alternative<BinaryTree>(topology) ? TargetSpec::kAllLeaves
                                                      : TargetSpec::kLastSite;
}

HittingSweepCell to_cell(const HittingResult& result) {
  HittingSweepCell cell;
  cell.tau_est = result.tau_est;
  cell.truncation_time = result.truncation_time;
  cell.residual = result.residual;
  cell.status = RowStatus::kOk;
  return cell;
}

}  // namespace

std::vector<HittingSweepRow> hitting_sweep(const Topology& topology,
                                           const std::vector<AlphaMode>& alphas,
                                           const std::vector<double>& loop_weights,
                                           double epsilon, int jobs, long max_steps) {
  validate(topology);
  for (double l : loop_weights) {
    validate(CoinSpec{coin_degree(topology), l});
  }
  const TargetSpec target = default_target(topology);
  const std::vector<int> absorbing = absorbing_set(topology, target);

  std::vector<HittingSweepRow> rows(loop_weights.size());
  run_indexed(loop_weights.size(), jobs, [&](size_t i) {
    const double l = loop_weights[i];
    HittingSweepRow row;
    row.loop_weight = l;
    for (const AlphaMode& alpha : alphas) {
      MeasuredWalk walk;
      walk.config = make_walk_config(topology, l, alpha, 0);
      walk.absorbing_sites = absorbing;
      walk.epsilon = epsilon;
      walk.max_steps = max_steps;
      HittingSweepCell cell;
      try {
        cell = to_cell(first_crossing_series(walk));
      } catch (const MaxStepsExceeded& e) {
        cell.status = RowStatus::kMaxStepsExceeded;
        cell.truncation_time = e.steps();
        cell.tau_est = std::nan("");
        cell.residual = 1.0 - e.captured();
      }
      row.quantum.push_back(cell);
    }
    try {
      row.classical = to_cell(classical_hitting_time(topology, l, target, epsilon, max_steps));
    } catch (const MaxStepsExceeded& e) {
      row.classical.status = RowStatus::kMaxStepsExceeded;
      row.classical.truncation_time = e.steps();
      row.classical.tau_est = std::nan("");
      row.classical.residual = 1.0 - e.captured();
    }
    rows[i] = std::move(row);
  });
  return rows;
}

}  // namespace lqw
