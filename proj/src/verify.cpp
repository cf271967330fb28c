#include "lqw/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "lqw/analysis.hpp"
#include "lqw/classical.hpp"
#include "lqw/evolve.hpp"
#include "lqw/hitting.hpp"
#include "lqw/reference.hpp"

namespace lqw {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckResult finish(CheckResult result, const Stopwatch& watch) {
  result.seconds = watch.seconds();
  result.passed = result.max_deviation <= result.threshold && result.detail.empty();
  return result;
}

void note_worst(CheckResult& result, double deviation, const std::string& where) {
  if (deviation > result.max_deviation) {
    result.max_deviation = deviation;
    if (deviation > result.threshold) {
      result.detail = where;
    }
  }
}

double simulated_ring_mean(int sites, double loop_weight, const AlphaMode& alpha, int steps) {
  const WalkConfig config = make_walk_config(DirectedRing{sites}, loop_weight, alpha, steps);
  const WalkerState state = evolve(config);
  return mean_position(position_distribution(state), config.topology);
}

}  // namespace

CheckResult check_coin_algebra() {
  Stopwatch watch;
  CheckResult result{.name = "coin-algebra", .threshold = 1e-12};
  for (int degree = 1; degree <= 8; ++degree) {
    for (double l : {0.0, 0.2, 1.0, 10.0, 1e6}) {
      const CoinSpec spec{degree, l};
      const CoinMatrix coin = build_grover_coin(spec);
      char where[64];
      std::snprintf(where, sizeof(where), "d=%d l=%g", degree, l);
      note_worst(result, max_asymmetry(coin), where);
      note_worst(result, max_unitarity_deviation(coin), where);
      note_worst(result, max_involution_deviation(coin), where);
      note_worst(result, max_eigenstate_deviation(coin, spec), where);
    }
  }
  return finish(result, watch);
}

CheckResult check_dense_oracle_equivalence() {
  Stopwatch watch;
  CheckResult result{.name = "dense-oracle-equivalence", .threshold = 1e-10};

  struct Case {
    Topology topology;
    double loop_weight;
    AlphaMode alpha;
    int steps;
  };
  const std::vector<Case> cases = {
      {DirectedRing{16}, 0.0, AlphaMode::finite(0.0), 12},
      {DirectedRing{16}, 0.3, AlphaMode::finite(1.0), 12},
      {DirectedRing{16}, 7.0, AlphaMode::equal_to_loop(), 12},
      {DirectedRing{12}, 10.0, AlphaMode::infinite(), 10},
      {UndirectedLine{6}, 0.5, AlphaMode::finite(1.0), 6},
      {UndirectedLine{7}, 2.0, AlphaMode::infinite(), 7},
      {BinaryTree{2}, 0.2, AlphaMode::finite(0.0), 12},
      {BinaryTree{3}, 3.0, AlphaMode::infinite(), 12},
  };
  for (const Case& c : cases) {
    const WalkConfig config = make_walk_config(c.topology, c.loop_weight, c.alpha, c.steps);
    const WalkerState state = evolve(config);
    const reference::DenseEvolution dense = reference::dense_evolve(config);
    const auto dense_site_major =
        reference::to_site_major(dense.amplitudes, state.coin_dim, state.sites);

    const std::string where = topology_name(c.topology) + " l=" + std::to_string(c.loop_weight);
    for (size_t i = 0; i < state.amplitudes.size(); ++i) {
      note_worst(result, std::abs(state.amplitudes[i] - dense_site_major[i]), where);
    }
    for (size_t k = 0; k < dense.absorbed_by_time.size(); ++k) {
      note_worst(result, std::abs(state.absorbed_by_time[k] - dense.absorbed_by_time[k]), where);
    }
  }
  return finish(result, watch);
}

CheckResult check_unitarity_random_configs(unsigned seed) {
  Stopwatch watch;
  CheckResult result{.name = "unitarity-norm-bookkeeping", .threshold = 1e-10};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> topo_pick(0, 2);
  std::uniform_real_distribution<double> log_l(-3.0, 3.0);
  std::uniform_int_distribution<int> alpha_pick(0, 3);
  std::uniform_int_distribution<int> steps_pick(1, 30);

  for (int trial = 0; trial < 200; ++trial) {
    Topology topology;
    switch (topo_pick(rng)) {
      case 0:
        topology = DirectedRing{std::uniform_int_distribution<int>(4, 40)(rng)};
        break;
      case 1:
        topology = UndirectedLine{std::uniform_int_distribution<int>(30, 40)(rng)};
        break;
      default:
        topology = BinaryTree{std::uniform_int_distribution<int>(2, 6)(rng)};
        break;
    }
    const double l = (trial % 17 == 0) ? 0.0 : std::pow(10.0, log_l(rng));
    AlphaMode alpha = AlphaMode::finite(0.0);
    switch (alpha_pick(rng)) {
      case 0:
        alpha = AlphaMode::finite(std::pow(10.0, log_l(rng)));
        break;
      case 1:
        alpha = AlphaMode::finite(0.0);
        break;
      case 2:
        alpha = AlphaMode::equal_to_loop();
        break;
      default:
        alpha = AlphaMode::infinite();
        break;
    }
    int steps = steps_pick(rng);
    if (const auto* ring = std::get_if<DirectedRing>(&topology)) {
      steps = std::min(steps, ring->num_sites - 2);
    }
    if (const auto* line = std::get_if<UndirectedLine>(&topology)) {
      steps = std::min(steps, line->half_width);
    }
    const WalkConfig config = make_walk_config(topology, l, alpha, steps);
    const WalkerState state = evolve(config);
    const double total = state.survival_norm2() + state.absorbed_total();
    char where[96];
    std::snprintf(where, sizeof(where), "trial %d (%s l=%.3g t=%d)", trial,
                  topology_name(topology).c_str(), l, steps);
    note_worst(result, std::abs(total - 1.0), where);
  }
  return finish(result, watch);
}

CheckResult check_mirror_symmetry() {
  Stopwatch watch;
  CheckResult result{.name = "mirror-symmetry", .threshold = 1e-10};
  const int sites = 64;
  for (double l : {0.2, 5.0}) {
    WalkConfig config_l = make_walk_config(DirectedRing{sites}, l, AlphaMode::finite(1.0), 0);
    WalkConfig config_inv =
        make_walk_config(DirectedRing{sites}, 1.0 / l, AlphaMode::finite(1.0), 0);
    WalkerState state_l = initial_state(config_l);
    WalkerState state_inv = initial_state(config_inv);
    const CoinMatrix coin_l = build_grover_coin(config_l.coin);
    const CoinMatrix coin_inv = build_grover_coin(config_inv.coin);
    const ShiftTable shift = build_shift_table(config_l.topology);
    for (int t = 1; t <= 60; ++t) {
      step_in_place(state_l, coin_l, shift);
      step_in_place(state_inv, coin_inv, shift);
      const PositionDistribution dist_l = position_distribution(state_l);
      const PositionDistribution dist_inv = position_distribution(state_inv);
      char where[64];
      std::snprintf(where, sizeof(where), "l=%g t=%d", l, t);
      for (int x = 0; x <= t; ++x) {
        note_worst(result, std::abs(dist_l.probabilities[x] - dist_inv.probabilities[t - x]),
                   where);
      }
    }
  }
  return finish(result, watch);
}

CheckResult check_hitting_purestate_vs_density() {
  Stopwatch watch;
  CheckResult result{.name = "hitting-purestate-vs-density", .threshold = 1e-10};
  struct Case {
    int sites;
    double loop_weight;
    AlphaMode alpha;
  };
  const std::vector<Case> cases = {
      {5, 0.8, AlphaMode::finite(1.0)},
      {5, 2.0, AlphaMode::infinite()},
      {8, 0.8, AlphaMode::infinite()},
      {8, 2.0, AlphaMode::finite(1.0)},
  };
  const int t_max = 10;
  for (const Case& c : cases) {
    MeasuredWalk walk;
    walk.config = make_walk_config(DirectedRing{c.sites}, c.loop_weight, c.alpha, 0);
    walk.absorbing_sites = absorbing_set(walk.config.topology, TargetSpec::kLastSite);
    walk.epsilon = 0.5;  // only the first t_max terms matter here
    walk.max_steps = kDefaultMaxHittingSteps;

    // recursion, run for exactly t_max steps
    WalkerState state = initial_state(walk.config);
    const CoinMatrix coin = build_grover_coin(walk.config.coin);
    const ShiftTable shift = build_shift_table(walk.config.topology);
    std::vector<double> recursion;
    for (int t = 0; t < t_max; ++t) {
      step_in_place(state, coin, shift);
      recursion.push_back(absorb_sites(state, walk.absorbing_sites));
    }

    const std::vector<double> dense = reference::dense_first_crossing_series(walk, t_max);
    char where[64];
    std::snprintf(where, sizeof(where), "N=%d l=%g", c.sites, c.loop_weight);
    for (int t = 0; t < t_max; ++t) {
      note_worst(result, std::abs(recursion[t] - dense[t]), where);
    }
  }
  return finish(result, watch);
}

CheckResult check_classical_closed_forms() {
  Stopwatch watch;
  CheckResult result{.name = "classical-closed-forms", .threshold = 1e-10};
  for (double l : {0.0, 0.5, 1.0, 10.0, 1e4}) {
    for (int t : {50, 200}) {
      const ClassicalDistribution ring_dist = classical_evolve(DirectedRing{t + 2}, l, t);
      const double mean = classical_mean_position(ring_dist, DirectedRing{t + 2});
      char where[48];
      std::snprintf(where, sizeof(where), "ring l=%g t=%d", l, t);
      note_worst(result, std::abs(mean - t / (1.0 + l)), where);

      const ClassicalDistribution line_dist = classical_evolve(UndirectedLine{t}, l, t);
      const double sigma = classical_std_position(line_dist, UndirectedLine{t});
      std::snprintf(where, sizeof(where), "line l=%g t=%d", l, t);
      note_worst(result, std::abs(sigma - std::sqrt(2.0 * t / (2.0 + l))), where);
    }
  }
  return finish(result, watch);
}

CheckResult check_scaling_table() {
  Stopwatch watch;
  CheckResult result{.name = "scaling-table", .threshold = 0.1};
  // small alpha, small l: mean independent of l (fitted exponent ~ 0)
  {
    std::vector<std::pair<double, double>> samples;
    for (double e : {-3.0, -2.5, -2.0, -1.5, -1.0}) {
      const double l = std::pow(10.0, e);
      samples.emplace_back(l, simulated_ring_mean(128, l, AlphaMode::finite(0.0), 100));
    }
    const PowerLawFit fit = fit_scaling_exponent(samples);
    note_worst(result, std::abs(fit.exponent - 0.0), "alpha=0 small-l exponent");
  }
  // large alpha, large l: mean ~ 1/l
  {
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 5; ++i) {
      const double l = 1e6 * std::pow(100.0, i / 4.0);
      samples.emplace_back(l, simulated_ring_mean(128, l, AlphaMode::infinite(), 100));
    }
    const PowerLawFit fit = fit_scaling_exponent(samples);
    note_worst(result, std::abs(fit.exponent - (-1.0)), "alpha=inf large-l exponent");
  }
  // classical large l: mean ~ 1/l (transfer iteration, not the closed form)
  {
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 5; ++i) {
      const double l = 1e2 * std::pow(100.0, i / 4.0);
      const ClassicalDistribution dist = classical_evolve(DirectedRing{102}, l, 100);
      samples.emplace_back(l, classical_mean_position(dist, DirectedRing{102}));
    }
    const PowerLawFit fit = fit_scaling_exponent(samples);
    note_worst(result, std::abs(fit.exponent - (-1.0)), "classical large-l exponent");
  }
  return finish(result, watch);
}

CheckResult check_analytic_mean_agreement() {
  Stopwatch watch;
  CheckResult result{.name = "analytic-mean-agreement", .threshold = 1.0};
  // Relative-error budget, measured against simulation: 5% everywhere except
  // the l=1e4 edge of the alpha=100 series, where the O(l^-3/2) remainder of
  // the model is not suppressed by 1/(alpha+1) and the true error is ~7.5%.
  std::ostringstream detail;
  double worst_ratio = 0.0;
  for (double alpha : {0.0, 1.0, 10.0, 100.0}) {
    for (int t : {20, 50}) {
      double previous_error = 1e300;
      for (double l : {1e4, 1e5, 1e6}) {
        const double simulated =
            simulated_ring_mean(t + 2, l, AlphaMode::finite(alpha), t);
        const double analytic = analytic_mean_position({alpha, l, t});
        const double rel = std::abs(analytic - simulated) / simulated;
        const double budget = (l <= 1e4 && alpha >= 100.0) ? 0.08 : 0.05;
        worst_ratio = std::max(worst_ratio, rel / budget);
        if (rel > budget) {
          detail << "alpha=" << alpha << " t=" << t << " l=" << l << " rel=" << rel << "; ";
        }
        if (rel > previous_error * (1.0 + 1e-9)) {
          detail << "non-monotone error at alpha=" << alpha << " t=" << t << " l=" << l << "; ";
        }
        previous_error = rel;
      }
    }
  }
  result.max_deviation = worst_ratio;  // fraction of the per-point budget used
  result.detail = detail.str();
  return finish(result, watch);
}

std::vector<CheckResult> run_verification_suite(unsigned seed) {
  return {
      check_coin_algebra(),
      check_dense_oracle_equivalence(),
      check_unitarity_random_configs(seed),
      check_mirror_symmetry(),
      check_hitting_purestate_vs_density(),
      check_classical_closed_forms(),
      check_scaling_table(),
      check_analytic_mean_agreement(),
  };
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    char line[256];
    std::snprintf(line, sizeof(line), "[%s] %-32s max dev %.3e (tol %.0e)  %.2fs\n",
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_deviation, r.threshold,
                  r.seconds);
    out << line;
    if (!r.passed && !r.detail.empty()) {
      out << "       " << r.detail << "\n";
    }
  }
  return out.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace lqw
