#include "lqw/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace lqw {

WalkConfig make_walk_config(const Topology& topology, double loop_weight,
                            const AlphaMode& alpha, int steps) {
  WalkConfig config;
  config.topology = topology;
  config.coin = CoinSpec{coin_degree(topology), loop_weight};
  config.alpha = alpha;
  config.steps = steps;
  config.start = start_index(topology);
  return config;
}

void validate(const WalkConfig& config) {
  validate(config.topology);
  validate(config.coin);
  if (config.coin.degree != coin_degree(config.topology)) {
    throw std::invalid_argument("coin degree does not match the topology");
  }
  if (config.steps < 0) {
    throw std::invalid_argument("step count must be >= 0");
  }
  if (config.start < 0 || config.start >= site_count(config.topology)) {
    throw std::invalid_argument("start site out of range");
  }
}

double WalkerState::survival_norm2() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

double WalkerState::absorbed_total() const {
  double total = 0.0;
  for (double p : absorbed_by_time) total += p;
  return total;
}

ShiftTable build_shift_table(const Topology& topology) {
  ShiftTable table;
  table.coin_dim = coin_degree(topology) + 1;
  table.sites = site_count(topology);
  table.target.assign(static_cast<size_t>(table.sites) * table.coin_dim, -1);
  for (int site = 0; site < table.sites; ++site) {
    for (int dir = 0; dir < table.coin_dim; ++dir) {
      const auto dest = shift_target(topology, dir, site);
      table.target[static_cast<size_t>(site) * table.coin_dim + dir] = dest ? *dest : -1;
    }
  }
  return table;
}

WalkerState initial_state(const WalkConfig& config) {
  validate(config);
  const CoinState coin_state = build_initial_coin_state(config.coin, config.alpha);
  WalkerState state;
  state.coin_dim = config.coin.degree + 1;
  state.sites = site_count(config.topology);
  state.amplitudes.assign(static_cast<size_t>(state.sites) * state.coin_dim, {0.0, 0.0});
  for (int dir = 0; dir < state.coin_dim; ++dir) {
    state.at(config.start, dir) = coin_state.amplitudes[dir];
  }
  return state;
}

void step_in_place(WalkerState& state, const CoinMatrix& coin, const ShiftTable& shift) {
  if (coin.dim != state.coin_dim || shift.sites != state.sites) {
    throw std::invalid_argument("state dimensions do not match coin/shift");
  }
  const int dim = state.coin_dim;
  // coin acts blockwise per site; dim <= 3 everywhere in this artifact
  std::vector<std::complex<double>> block(dim);
  for (int site = 0; site < state.sites; ++site) {
    std::complex<double>* amp = &state.amplitudes[static_cast<size_t>(site) * dim];
    for (int r = 0; r < dim; ++r) {
      std::complex<double> acc{0.0, 0.0};
      for (int c = 0; c < dim; ++c) acc += coin(r, c) * amp[c];
      block[r] = acc;
    }
    for (int r = 0; r < dim; ++r) amp[r] = block[r];
  }
  // shift: move each direction's amplitude to its destination site
  std::vector<std::complex<double>> next(state.amplitudes.size(), {0.0, 0.0});
  for (int site = 0; site < state.sites; ++site) {
    for (int dir = 0; dir < dim; ++dir) {
      const std::complex<double> a = state.amplitudes[static_cast<size_t>(site) * dim + dir];
      const int dest = shift(site, dir);
      if (dest < 0) {
        if (a != std::complex<double>{0.0, 0.0}) {
          throw std::runtime_error("amplitude reached a site with no outgoing edge in that direction");
        }
        continue;
      }
      next[static_cast<size_t>(dest) * dim + dir] += a;
    }
  }
  state.amplitudes.swap(next);
  ++state.time;
}

WalkerState step(const WalkerState& state, const WalkConfig& config) {
  validate(config);
  WalkerState out = state;
  const CoinMatrix coin = build_grover_coin(config.coin);
  const ShiftTable shift = build_shift_table(config.topology);
  step_in_place(out, coin, shift);
  return out;
}

double absorb_sites(WalkerState& state, const std::vector<int>& sites) {
  if (state.absorbed_by_site.empty()) {
    state.absorbed_by_site.assign(state.sites, 0.0);
  }
  double removed = 0.0;
  for (int site : sites) {
    double here = 0.0;
    for (int dir = 0; dir < state.coin_dim; ++dir) {
      here += std::norm(state.at(site, dir));
      state.at(site, dir) = {0.0, 0.0};
    }
    state.absorbed_by_site[site] += here;
    removed += here;
  }
  state.absorbed_by_time.push_back(removed);
  return removed;
}

WalkerState evolve(const WalkConfig& config) {
  validate(config);
  if (const auto* line = std::get_if<UndirectedLine>(&config.topology)) {
    if (line->half_width < config.steps) {
      throw std::invalid_argument("undirected line needs half_width >= steps");
    }
  }
  if (const auto* ring = std::get_if<DirectedRing>(&config.topology)) {
    if (ring->num_sites < config.steps + 2) {
      throw std::invalid_argument("directed ring needs num_sites >= steps+2 (no wrap)");
    }
  }
  WalkerState state = initial_state(config);
  const CoinMatrix coin = build_grover_coin(config.coin);
  const ShiftTable shift = build_shift_table(config.topology);
  const bool measured = std::holds_alternative<BinaryTree>(config.topology);
  std::vector<int> leaves;
  if (measured) {
    leaves = absorbing_set(config.topology, TargetSpec::kAllLeaves);
  }
  for (int t = 0; t < config.steps; ++t) {
    step_in_place(state, coin, shift);
    if (measured) absorb_sites(state, leaves);
  }
  return state;
}

PositionDistribution position_distribution(const WalkerState& state, bool include_absorbed) {
  PositionDistribution dist;
  dist.time = state.time;
  dist.includes_absorbed = include_absorbed && !state.absorbed_by_site.empty();
  dist.probabilities.assign(state.sites, 0.0);
  for (int site = 0; site < state.sites; ++site) {
    double p = 0.0;
    for (int dir = 0; dir < state.coin_dim; ++dir) p += std::norm(state.at(site, dir));
    dist.probabilities[site] = p;
  }
  if (dist.includes_absorbed) {
    for (int site = 0; site < state.sites; ++site) {
      dist.probabilities[site] += state.absorbed_by_site[site];
    }
  }
  return dist;
}

double mean_position(const PositionDistribution& dist, const Topology& topology) {
  double mean = 0.0;
  for (size_t site = 0; site < dist.probabilities.size(); ++site) {
    mean += dist.probabilities[site] * position_observable(topology, static_cast<int>(site));
  }
  return mean;
}

double std_position(const PositionDistribution& dist, const Topology& topology) {
  double mean = 0.0;
  double second = 0.0;
  for (size_t site = 0; site < dist.probabilities.size(); ++site) {
    const double x = position_observable(topology, static_cast<int>(site));
    mean += dist.probabilities[site] * x;
    second += dist.probabilities[site] * x * x;
  }
  const double var = second - mean * mean;
  return var > 0.0 ? std::sqrt(var) : 0.0;
}

}  // namespace lqw
