#pragma once

#include <complex>
#include <vector>

#include "lqw/coin.hpp"
#include "lqw/topology.hpp"

namespace lqw {

/// Full experiment descriptor for one walk.
struct WalkConfig {
  Topology topology;
  CoinSpec coin;  // degree must match the topology
  AlphaMode alpha = AlphaMode::finite(0.0);
  int steps = 0;
  int start = 0;  // internal site index
};

/// Convenience constructor: coin degree and start site taken from the
/// topology.
WalkConfig make_walk_config(const Topology& topology, double loop_weight,
                            const AlphaMode& alpha, int steps);

/// Throws std::invalid_argument on degree mismatch or bad parameters.
void validate(const WalkConfig& config);

/// Complex amplitudes over (site, coin direction), site-major layout, plus
/// the ledger of probability removed by leaf measurements. Survival norm
/// plus total absorbed mass stays 1.
struct WalkerState {
  int coin_dim = 0;
  int sites = 0;
  int time = 0;
  std::vector<std::complex<double>> amplitudes;  // amplitudes[site*coin_dim + dir]
  std::vector<double> absorbed_by_time;  // absorbed_by_time[k] = mass measured at step k+1
  std::vector<double> absorbed_by_site;  // accumulated per site; empty if nothing absorbed

  std::complex<double>& at(int site, int dir) { return amplitudes[static_cast<size_t>(site) * coin_dim + dir]; }
  const std::complex<double>& at(int site, int dir) const {
    return amplitudes[static_cast<size_t>(site) * coin_dim + dir];
  }

  double survival_norm2() const;
  double absorbed_total() const;
};

/// Per-direction site permutation in index form; -1 marks an undefined move.
struct ShiftTable {
  int coin_dim = 0;
  int sites = 0;
  std::vector<int> target;  // target[site*coin_dim + dir]

  int operator()(int site, int dir) const { return target[static_cast<size_t>(site) * coin_dim + dir]; }
};

ShiftTable build_shift_table(const Topology& topology);

/// |s_alpha> (x) |start>
WalkerState initial_state(const WalkConfig& config);

/// One application of U = S (C (x) I): the coin acts blockwise on every
/// site, then amplitudes move along their coin direction. Throws
/// std::runtime_error if nonzero amplitude sits where a move is undefined
/// (line boundary, or a tree leaf outside the measured protocol).
void step_in_place(WalkerState& state, const CoinMatrix& coin, const ShiftTable& shift);
WalkerState step(const WalkerState& state, const WalkConfig& config);

/// Measures the given sites: their probability is appended to the absorbed
/// ledgers and the amplitudes are projected out. Returns the mass removed.
double absorb_sites(WalkerState& state, const std::vector<int>& sites);

/// Runs config.steps applications of U from the initial state. On the binary
/// tree every step is followed by a leaf measurement, which keeps the walk
/// well defined on the finite tree. Mean-position size rules are enforced:
/// half_width >= steps on the line, num_sites >= steps+2 on the ring (the
/// wavefront must not wrap).
WalkerState evolve(const WalkConfig& config);

struct PositionDistribution {
  std::vector<double> probabilities;  // indexed by site
  int time = 0;
  bool includes_absorbed = false;
};

/// P(site) = sum over coin directions of |amplitude|^2, plus the absorbed
/// mass at its absorption site when include_absorbed is set.
PositionDistribution position_distribution(const WalkerState& state, bool include_absorbed = true);

double mean_position(const PositionDistribution& dist, const Topology& topology);
double std_position(const PositionDistribution& dist, const Topology& topology);

}  // namespace lqw
