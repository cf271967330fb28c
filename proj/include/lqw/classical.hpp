#pragma once

#include <vector>

#include "lqw/hitting.hpp"
#include "lqw/topology.hpp"

namespace lqw {

/// Probability distribution of the lackadaisical classical walker, evolved
/// exactly by per-site transition rules (transfer-matrix form, matrix-free).
/// Transition weights: 1 per non-loop edge, loop_weight for the self-loop,
/// normalized per site. Tree leaves absorb.
struct ClassicalDistribution {
  std::vector<double> probabilities;  // indexed by site
  int time = 0;
  std::vector<double> absorbed_by_time;
  std::vector<double> absorbed_by_site;

  double surviving_total() const;
  double absorbed_total() const;
};

ClassicalDistribution classical_initial(const Topology& topology);

ClassicalDistribution classical_step(const ClassicalDistribution& dist, const Topology& topology,
                                     double loop_weight);

/// steps applications of classical_step from the start site. Size rules
/// match the quantum evolve (no wrap on the ring, no boundary contact on
/// the line).
ClassicalDistribution classical_evolve(const Topology& topology, double loop_weight, int steps);

double classical_mean_position(const ClassicalDistribution& dist, const Topology& topology);
double classical_std_position(const ClassicalDistribution& dist, const Topology& topology);

/// First-arrival series of the absorbing classical chain; stops at the
/// smallest T with cumulative probability >= 1-epsilon. Throws
/// MaxStepsExceeded when the cap is hit first.
HittingResult classical_hitting_time(const Topology& topology, double loop_weight,
                                     TargetSpec target, double epsilon,
                                     long max_steps = kDefaultMaxHittingSteps);

}  // namespace lqw
