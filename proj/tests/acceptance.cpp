// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is pinned here.
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lqw/analysis.hpp"
#include "lqw/classical.hpp"
#include "lqw/evolve.hpp"
#include "lqw/hitting.hpp"
#include "lqw/verify.hpp"

using namespace lqw;

namespace {

int g_failures = 0;

void report(const std::string& id, bool passed, const std::string& detail) {
  std::printf("[%s][%s] %s\n", id.c_str(), passed ? "PASS" : "FAIL", detail.c_str());
  if (!passed) ++g_failures;
}

double ring_mean(int sites, double l, const AlphaMode& alpha, int steps) {
  const WalkConfig config = make_walk_config(DirectedRing{sites}, l, alpha, steps);
  return mean_position(position_distribution(evolve(config)), config.topology);
}

double tree_mean_level(int depth, double l, const AlphaMode& alpha, int steps) {
  const WalkConfig config = make_walk_config(BinaryTree{depth}, l, alpha, steps);
  return mean_position(position_distribution(evolve(config), true), config.topology);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> out;
  for (int i = 0; i < points; ++i) {
    out.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (points - 1)));
  }
  return out;
}

double fitted_slope(const std::vector<double>& loops, const std::vector<double>& means) {
  std::vector<std::pair<double, double>> samples;
  for (size_t i = 0; i < loops.size(); ++i) samples.emplace_back(loops[i], means[i]);
  return fit_scaling_exponent(samples).exponent;
}

// criterion 1: directed-line crossover slopes at t=100, alpha=inf, N=256
void criterion_1() {
  const int steps = 100;
  const int sites = 256;
  const auto slope_on = [&](double lo, double hi) {
    const std::vector<double> loops = log_grid(lo, hi, 9);
    std::vector<double> means;
    for (double l : loops) means.push_back(ring_mean(sites, l, AlphaMode::infinite(), steps));
    return fitted_slope(loops, means);
  };
  const double left = slope_on(1e2, 1e3);
  const double right = slope_on(1e6, 1e8);
  const bool ok = std::abs(left - (-0.5)) <= 0.1 && std::abs(right - (-1.0)) <= 0.1;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "directed-line crossover: slope[1e2,1e3]=%.4f (want -0.5+-0.1), "
                "slope[1e6,1e8]=%.4f (want -1.0+-0.1)",
                left, right);
  report("C1", ok, detail);
}

// criterion 2: binary-tree crossover slopes at t=10, depth=10, alpha=inf
void criterion_2() {
  const auto slope_on = [&](double lo, double hi) {
    const std::vector<double> loops = log_grid(lo, hi, 9);
    std::vector<double> means;
    for (double l : loops) means.push_back(tree_mean_level(10, l, AlphaMode::infinite(), 10));
    return fitted_slope(loops, means);
  };
  const double left = slope_on(std::pow(10.0, 0.5), std::pow(10.0, 1.5));
  const double right = slope_on(1e4, 1e6);
  const bool ok = std::abs(left - (-0.5)) <= 0.1 && std::abs(right - (-1.0)) <= 0.1;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "binary-tree crossover: slope[10^0.5,10^1.5]=%.4f (want -0.5+-0.1), "
                "slope[1e4,1e6]=%.4f (want -1.0+-0.1)",
                left, right);
  report("C2", ok, detail);
}

// criterion 3: l=1 equality point on the directed line
void criterion_3() {
  const double quantum = ring_mean(256, 1.0, AlphaMode::finite(0.0), 100);
  const ClassicalDistribution dist = classical_evolve(DirectedRing{256}, 1.0, 100);
  const double classical = classical_mean_position(dist, DirectedRing{256});
  const bool ok = std::abs(quantum - 50.0) <= 1e-9 && std::abs(classical - 50.0) <= 1e-9;
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "l=1 equality: quantum=%.12f classical=%.12f (want 50 within 1e-9)", quantum,
                classical);
  report("C3", ok, detail);
}

// criterion 4: classical closed forms on ring and line
void criterion_4() {
  double worst = 0.0;
  for (double l : {0.0, 1.0, 10.0, 1e4}) {
    for (int t : {50, 200}) {
      const ClassicalDistribution ring = classical_evolve(DirectedRing{t + 2}, l, t);
      worst = std::max(worst,
                       std::abs(classical_mean_position(ring, DirectedRing{t + 2}) - t / (1.0 + l)));
      const ClassicalDistribution line = classical_evolve(UndirectedLine{t}, l, t);
      worst = std::max(worst, std::abs(classical_std_position(line, UndirectedLine{t}) -
                                       std::sqrt(2.0 * t / (2.0 + l))));
    }
  }
  char detail[192];
  std::snprintf(detail, sizeof(detail),
                "classical closed forms (mean=t/(1+l), sigma=sqrt(2t/(2+l))): max dev %.3e "
                "(want <= 1e-10)",
                worst);
  report("C4", worst <= 1e-10, detail);
}

// criterion 5: large-l analytic mean vs simulation, 5% and monotone in l
void criterion_5() {
  bool ok = true;
  double worst = 0.0;
  std::string worst_at;
  for (double alpha : {0.0, 1.0, 100.0}) {
    double previous = 1e300;
    for (double l : {1e4, 1e5, 1e6}) {
      const double simulated = ring_mean(52, l, AlphaMode::finite(alpha), 50);
      const double analytic = analytic_mean_position({alpha, l, 50});
      const double rel = std::abs(analytic - simulated) / simulated;
      if (rel > worst) {
        worst = rel;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "alpha=%g l=%g", alpha, l);
        worst_at = buf;
      }
      if (rel > 0.05) ok = false;
      if (rel > previous * (1.0 + 1e-9)) ok = false;  // must shrink with l
      previous = rel;
    }
  }
  char detail[224];
  std::snprintf(detail, sizeof(detail),
                "analytic vs simulated mean, alpha in {0,1,100}, l in {1e4,1e5,1e6}, t=50: "
                "worst rel err %.4f at %s (want <= 0.05, shrinking with l)",
                worst, worst_at.c_str());
  report("C5", ok, detail);
}

// criterion 6: hitting times on the N=101 ring
void criterion_6() {
  const Topology ring = DirectedRing{101};
  const double eps = 1e-6;
  bool ok = true;
  std::string problems;

  // classical tau = 100 (1+l) within 0.2%
  for (double l : {0.5, 1.0, 10.0, 100.0}) {
    const HittingResult r = classical_hitting_time(ring, l, TargetSpec::kLastSite, eps);
    const double exact = 100.0 * (1.0 + l);
    if (std::abs(r.tau_est - exact) / exact > 0.002) {
      ok = false;
      problems += " classical(l=" + std::to_string(l) + ")";
    }
  }
  // quantum tau(alpha=0, l=1) = 200 within 1e-6
  MeasuredWalk walk;
  walk.config = make_walk_config(ring, 1.0, AlphaMode::finite(0.0), 0);
  walk.absorbing_sites = absorbing_set(ring, TargetSpec::kLastSite);
  walk.epsilon = eps;
  const double tau_l1 = first_crossing_series(walk).tau_est;
  if (std::abs(tau_l1 - 200.0) > 1e-6) {
    ok = false;
    problems += " quantum(l=1)";
  }
  // ordering flips across l=1 at every alpha in {0, 1, l, inf}
  const std::vector<AlphaMode> alphas = {AlphaMode::finite(0.0), AlphaMode::finite(1.0),
                                         AlphaMode::equal_to_loop(), AlphaMode::infinite()};
  const auto rows = hitting_sweep(ring, alphas, {0.1, 100.0}, eps, 4);
  for (const auto& cell : rows[0].quantum) {
    if (cell.status != RowStatus::kOk || !(rows[0].classical.tau_est < cell.tau_est)) {
      ok = false;
      problems += " l=0.1-ordering";
    }
  }
  for (const auto& cell : rows[1].quantum) {
    if (cell.status != RowStatus::kOk || !(cell.tau_est < rows[1].classical.tau_est)) {
      ok = false;
      problems += " l=100-ordering";
    }
  }
  char detail[256];
  std::snprintf(detail, sizeof(detail),
                "hitting N=101: classical=100(1+l) within 0.2%%, quantum tau(l=1)=%.9f "
                "(want 200 within 1e-6), classical faster at l=0.1 and quantum faster at "
                "l=100 for every alpha%s%s",
                tau_l1, problems.empty() ? "" : "; issues:", problems.c_str());
  report("C6", ok, detail);
}

// criterion 7: property suite (dense oracle, norms, coin algebra, mirror,
// pure-state vs density-operator hitting)
void criterion_7() {
  const std::vector<CheckResult> checks = {
      check_dense_oracle_equivalence(), check_unitarity_random_configs(),
      check_coin_algebra(),             check_mirror_symmetry(),
      check_hitting_purestate_vs_density()};
  bool ok = true;
  std::string detail = "property suite:";
  for (const CheckResult& c : checks) {
    ok = ok && c.passed;
    char buf[96];
    std::snprintf(buf, sizeof(buf), " %s=%s(%.1e)", c.name.c_str(), c.passed ? "pass" : "FAIL",
                  c.max_deviation);
    detail += buf;
  }
  report("C7", ok, detail);
}

// criterion 8: undirected line, quantum sigma above classical sigma across
// the l grid at t=50 (pure-loop initial coin state)
void criterion_8() {
  const int steps = 50;
  const Topology line = UndirectedLine{50};
  bool ok = true;
  double min_gap = 1e300;
  for (double l : log_grid(1e-1, 1e2, 13)) {
    const WalkConfig config = make_walk_config(line, l, AlphaMode::infinite(), steps);
    const double quantum = std_position(position_distribution(evolve(config)), line);
    const ClassicalDistribution dist = classical_evolve(line, l, steps);
    const double classical = classical_std_position(dist, line);
    min_gap = std::min(min_gap, quantum - classical);
    if (!(quantum > classical)) ok = false;
  }
  char detail[192];
  std::snprintf(detail, sizeof(detail),
                "undirected line t=50, alpha=inf, l in [0.1,100]: quantum sigma exceeds "
                "classical sigma at all 13 grid points (min gap %.4f)",
                min_gap);
  report("C8", ok, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%d/8 criteria passed\n", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
