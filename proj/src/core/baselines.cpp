#include "gtra/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gtra/rng.hpp"

namespace gtra {
namespace {

DefenseStrategy finish(const GameInstance& g, std::vector<double> q) {
  DefenseStrategy s;
  s.q = std::move(q);
  s.budget_feasible = within_budget(g, s.q);
  return s;
}

}  // namespace

DefenseStrategy part_ones(const GameInstance& g, PartOnesOrder order) {
  std::vector<std::size_t> visit(g.size());
  std::iota(visit.begin(), visit.end(), std::size_t{0});
  if (order == PartOnesOrder::DescendingReward) {
    std::stable_sort(visit.begin(), visit.end(),
                     [&](std::size_t a, std::size_t b) {
                       return g.targets[a].attack_reward >
                              g.targets[b].attack_reward;
                     });
  }
  std::vector<double> q(g.size(), 0.0);
  double remaining = g.budget;
  for (std::size_t i : visit) {
    const double w = g.resource_weight(i);
    if (remaining >= w) {
      q[i] = 1.0;
      remaining -= w;
    } else {
      q[i] = remaining / w;
      break;
    }
  }
  return finish(g, std::move(q));
}

DefenseStrategy rand_strategy(const GameInstance& g,
                              std::uint64_t stream_seed) {
  std::vector<double> q(g.size(), 0.0);
  if (g.budget > 0.0) {
    std::vector<double> draws(g.size());
    double denom = 0.0;
    // A zero denominator needs every draw to vanish; redraw if it happens.
    for (std::uint64_t attempt = 0; denom <= 0.0; ++attempt) {
      Rng rng(derive_seed(stream_seed, attempt));
      denom = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        draws[i] = rng.uniform();
        denom += draws[i] * g.resource_weight(i);
      }
      if (attempt > 64) break;
    }
    if (denom > 0.0) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        q[i] = std::min(1.0, draws[i] * g.budget / denom);
      }
    }
  }
  return finish(g, std::move(q));
}

DefenseStrategy average_strategy(const GameInstance& g) {
  const double share = g.budget / static_cast<double>(g.size());
  std::vector<double> q(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double w = g.resource_weight(i);
    q[i] = w > 0.0 ? std::min(1.0, share / w) : 1.0;
  }
  return finish(g, std::move(q));
}

DefenseStrategy all_ones(const GameInstance& g) {
  return finish(g, std::vector<double>(g.size(), 1.0));
}

DefenseStrategy ne_strategy(const GameInstance& g, int times,
                            const GaParams& params) {
  return iga_solve(g, times, params).q_star;
}

}  // namespace gtra
