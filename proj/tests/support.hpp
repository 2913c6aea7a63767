#pragma once

#include <cstdint>
#include <vector>

#include "gtra/game.hpp"
#include "gtra/rng.hpp"

namespace testing {

inline gtra::TargetParams target(double r, double p, double cm, double ca, int id = 1) {
  gtra::TargetParams t;
  t.id = id;
  t.attack_reward = r;
  t.attack_penalty = p;
  t.defense_cost = cm;
  t.attack_cost = ca;
  return t;
}

// The worked example target used throughout: R=2, P=1, C^m=0.3, C^a=0.5.
inline gtra::TargetParams sample_target() { return target(2.0, 1.0, 0.3, 0.5); }

inline gtra::GameInstance game(std::vector<gtra::TargetParams> targets, double budget,
                               double alpha = 0.8, double lambda = 1.5) {
  gtra::GameInstance g;
  for (std::size_t i = 0; i < targets.size(); ++i) targets[i].id = static_cast<int>(i + 1);
  g.targets = std::move(targets);
  g.budget = budget;
  g.alpha = alpha;
  g.lambda = lambda;
  g.seed = 7;
  return g;
}

// Random instance with values in the ranges the experiments use.
inline gtra::GameInstance random_game(gtra::Rng& rng, std::size_t n) {
  std::vector<gtra::TargetParams> ts;
  for (std::size_t i = 0; i < n; ++i) {
    ts.push_back(target(rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0),
                        rng.uniform(0.01, 1.0), rng.uniform(0.0, 1.0)));
  }
  gtra::GameInstance g = game(std::move(ts), rng.uniform(0.0, 2.0), rng.uniform(),
                              rng.uniform(0.0, 15.0));
  return g;
}

inline std::vector<double> random_unit_vector(gtra::Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform();
  return v;
}

}  // namespace testing
