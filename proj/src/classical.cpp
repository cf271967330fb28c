#include "lqw/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace lqw {

double ClassicalDistribution::surviving_total() const {
  double total = 0.0;
  for (double p : probabilities) total += p;
  return total;
}

double ClassicalDistribution::absorbed_total() const {
  double total = 0.0;
  for (double p : absorbed_by_time) total += p;
  return total;
}

ClassicalDistribution classical_initial(const Topology& topology) {
  validate(topology);
  ClassicalDistribution dist;
  dist.probabilities.assign(site_count(topology), 0.0);
  dist.probabilities[start_index(topology)] = 1.0;
  return dist;
}

ClassicalDistribution classical_step(const ClassicalDistribution& dist, const Topology& topology,
                                     double loop_weight) {
  validate(CoinSpec{coin_degree(topology), loop_weight});
  const int sites = site_count(topology);
  if (static_cast<int>(dist.probabilities.size()) != sites) {
    throw std::invalid_argument("distribution size does not match the topology");
  }
  ClassicalDistribution out = dist;
  out.time = dist.time + 1;
  std::vector<double>& next = out.probabilities;
  next.assign(sites, 0.0);

  const int degree = coin_degree(topology);
  const double stay = loop_weight / (degree + loop_weight);
  const double move = 1.0 / (degree + loop_weight);

  const auto* tree = std::get_if<BinaryTree>(&topology);
  for (int site = 0; site < sites; ++site) {
    const double p = dist.probabilities[site];
    if (p == 0.0) continue;
    if (tree && is_leaf(*tree, site)) {
      throw std::logic_error("probability mass left on an absorbing leaf");
    }
    next[site] += p * stay;
    for (int dir = 0; dir < degree; ++dir) {
      const auto dest = shift_target(topology, dir, site);
      if (!dest) {
        throw std::runtime_error("classical walker stepped off the graph");
      }
      next[*dest] += p * move;
    }
  }

  if (tree) {
    if (out.absorbed_by_site.empty()) out.absorbed_by_site.assign(sites, 0.0);
    double removed = 0.0;
    for (int node = 1 << tree->depth; node <= sites; ++node) {
      const int index = node - 1;
      removed += next[index];
      out.absorbed_by_site[index] += next[index];
      next[index] = 0.0;
    }
    out.absorbed_by_time.push_back(removed);
  }
  return out;
}

ClassicalDistribution classical_evolve(const Topology& topology, double loop_weight, int steps) {
  if (steps < 0) throw std::invalid_argument("step count must be >= 0");
  if (const auto* line = std::get_if<UndirectedLine>(&topology)) {
    if (line->half_width < steps) {
      throw std::invalid_argument("undirected line needs half_width >= steps");
    }
  }
  if (const auto* ring = std::get_if<DirectedRing>(&topology)) {
    if (ring->num_sites < steps + 2) {
      throw std::invalid_argument("directed ring needs num_sites >= steps+2 (no wrap)");
    }
  }
  ClassicalDistribution dist = classical_initial(topology);
  for (int t = 0; t < steps; ++t) {
    dist = classical_step(dist, topology, loop_weight);
  }
  return dist;
}

namespace {

double weighted_moment(const ClassicalDistribution& dist, const Topology& topology, int power) {
  double total = 0.0;
  for (size_t site = 0; site < dist.probabilities.size(); ++site) {
    double p = dist.probabilities[site];
    if (!dist.absorbed_by_site.empty()) p += dist.absorbed_by_site[site];
    const double x = position_observable(topology, static_cast<int>(site));
    total += p * (power == 1 ? x : x * x);
  }
  return total;
}

}  // namespace

double classical_mean_position(const ClassicalDistribution& dist, const Topology& topology) {
  return weighted_moment(dist, topology, 1);
}

double classical_std_position(const ClassicalDistribution& dist, const Topology& topology) {
  const double mean = weighted_moment(dist, topology, 1);
  const double var = weighted_moment(dist, topology, 2) - mean * mean;
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

HittingResult classical_hitting_time(const Topology& topology, double loop_weight,
                                     TargetSpec target, double epsilon, long max_steps) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must be in (0,1)");
  }
  const std::vector<int> targets = absorbing_set(topology, target);
  const int sites = site_count(topology);
  const int degree = coin_degree(topology);
  const double stay = loop_weight / (degree + loop_weight);
  const double move = 1.0 / (degree + loop_weight);

  std::vector<double> prob(sites, 0.0);
  std::vector<double> next(sites, 0.0);
  prob[start_index(topology)] = 1.0;
  std::vector<char> is_target(sites, 0);
  for (int site : targets) is_target[site] = 1;

  HittingResult result;
  double captured = 0.0;
  double tau = 0.0;
  long t = 0;
  while (captured < 1.0 - epsilon) {
    if (t >= max_steps) throw MaxStepsExceeded(max_steps, captured);
    ++t;
    next.assign(sites, 0.0);
    for (int site = 0; site < sites; ++site) {
      const double p = prob[site];
      if (p == 0.0) continue;
      next[site] += p * stay;
      for (int dir = 0; dir < degree; ++dir) {
        const auto dest = shift_target(topology, dir, site);
        if (!dest) throw std::runtime_error("classical walker stepped off the graph");
        next[*dest] += p * move;
      }
    }
    double arrived = 0.0;
    for (int site : targets) {
      arrived += next[site];
      next[site] = 0.0;
    }
    prob.swap(next);
    captured += arrived;
    tau += static_cast<double>(t) * arrived;
    result.first_crossing.push_back(arrived);
  }
  result.truncation_time = t;
  result.tau_est = tau;
  result.residual = 1.0 - captured;
  return result;
}

}  // namespace lqw
