#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "lqw/classical.hpp"

using namespace lqw;

TEST_CASE("single classical steps") {
  // ring, l=1: move or stay with probability 1/2 each
  {
    const Topology ring = DirectedRing{5};
    const ClassicalDistribution next = classical_step(classical_initial(ring), ring, 1.0);
    CHECK(next.probabilities[0] == doctest::Approx(0.5));
    CHECK(next.probabilities[1] == doctest::Approx(0.5));
  }
  // undirected line, l=0: left/right with probability 1/2
  {
    const Topology line = UndirectedLine{3};
    const ClassicalDistribution next = classical_step(classical_initial(line), line, 0.0);
    CHECK(next.probabilities[2] == doctest::Approx(0.5));  // x=-1
    CHECK(next.probabilities[4] == doctest::Approx(0.5));  // x=+1
    CHECK(next.probabilities[3] == doctest::Approx(0.0));
  }
  // tree, l=2: stay 1/2, each child 1/4
  {
    const Topology tree = BinaryTree{3};
    const ClassicalDistribution next = classical_step(classical_initial(tree), tree, 2.0);
    CHECK(next.probabilities[0] == doctest::Approx(0.5));   // node 1
    CHECK(next.probabilities[1] == doctest::Approx(0.25));  // node 2
    CHECK(next.probabilities[2] == doctest::Approx(0.25));  // node 3
  }
}

TEST_CASE("stochasticity is preserved") {
  for (double l : {0.0, 0.5, 7.0}) {
    const Topology ring = DirectedRing{30};
    ClassicalDistribution dist = classical_initial(ring);
    for (int t = 0; t < 25; ++t) {
      dist = classical_step(dist, ring, l);
      CHECK(dist.surviving_total() == doctest::Approx(1.0).epsilon(1e-12));
      for (double p : dist.probabilities) CHECK(p >= 0.0);
    }
  }
  // tree: survivors plus absorbed stay normalized
  const Topology tree = BinaryTree{4};
  ClassicalDistribution dist = classical_initial(tree);
  for (int t = 0; t < 12; ++t) {
    dist = classical_step(dist, tree, 1.0);
    CHECK(dist.surviving_total() + dist.absorbed_total() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ring mean matches the binomial closed form") {
  for (double l : {0.0, 0.5, 1.0, 10.0, 1e4}) {
    for (int t : {13, 100, 200}) {
      const Topology ring = DirectedRing{t + 2};
      const ClassicalDistribution dist = classical_evolve(ring, l, t);
      CHECK(std::abs(classical_mean_position(dist, ring) - t / (1.0 + l)) < 1e-10);
    }
  }
}

TEST_CASE("line width matches the per-step variance closed form") {
  // sigma = sqrt(2 t / (2+l)); at l=0, t=50 this is sqrt(50)
  const Topology line50 = UndirectedLine{50};
  const ClassicalDistribution dist0 = classical_evolve(line50, 0.0, 50);
  CHECK(classical_std_position(dist0, line50) == doctest::Approx(std::sqrt(50.0)).epsilon(1e-12));
  for (double l : {0.3, 2.0, 25.0}) {
    const ClassicalDistribution dist = classical_evolve(line50, l, 50);
    CHECK(std::abs(classical_std_position(dist, line50) - std::sqrt(100.0 / (2.0 + l))) < 1e-10);
  }
}

TEST_CASE("line distribution is symmetric and narrows as l grows") {
  const Topology line = UndirectedLine{40};
  double previous_sigma = 1e300;
  for (double l : {0.1, 1.0, 10.0, 100.0}) {
    const ClassicalDistribution dist = classical_evolve(line, l, 40);
    CHECK(std::abs(classical_mean_position(dist, line)) < 1e-12);
    for (int offset = 0; offset <= 40; ++offset) {
      CHECK(std::abs(dist.probabilities[40 - offset] - dist.probabilities[40 + offset]) < 1e-14);
    }
    const double sigma = classical_std_position(dist, line);
    CHECK(sigma < previous_sigma);
    previous_sigma = sigma;
  }
}

TEST_CASE("tree mean level matches the Bernoulli closed form while t <= depth") {
  // level advances with probability 2/(2+l) per step
  for (double l : {0.0, 0.5, 2.0, 10.0}) {
    const Topology tree = BinaryTree{10};
    const ClassicalDistribution dist = classical_evolve(tree, l, 10);
    CHECK(std::abs(classical_mean_position(dist, tree) - 20.0 / (2.0 + l)) < 1e-10);
  }
}

TEST_CASE("classical hitting on the ring") {
  // deterministic at l=0
  {
    const HittingResult result =
        classical_hitting_time(DirectedRing{101}, 0.0, TargetSpec::kLastSite, 1e-6);
    CHECK(result.truncation_time == 100);
    CHECK(result.first_crossing.back() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.tau_est == doctest::Approx(100.0).epsilon(1e-12));
  }
  // negative-binomial mean (N-1)(1+l) up to the epsilon truncation bias
  for (double l : {0.5, 1.0, 10.0}) {
    const HittingResult result =
        classical_hitting_time(DirectedRing{101}, l, TargetSpec::kLastSite, 1e-6);
    const double exact = 100.0 * (1.0 + l);
    CHECK(std::abs(result.tau_est - exact) / exact < 1e-3);
    CHECK(result.residual <= 1e-6);
  }
}

TEST_CASE("classical hitting on the tree") {
  const HittingResult result =
      classical_hitting_time(BinaryTree{10}, 0.0, TargetSpec::kAllLeaves, 1e-6);
  CHECK(result.truncation_time == 10);
  CHECK(result.tau_est == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("classical hitting enforces the step cap") {
  CHECK_THROWS_AS(classical_hitting_time(DirectedRing{101}, 10.0, TargetSpec::kLastSite, 1e-6, 50),
                  MaxStepsExceeded);
}
