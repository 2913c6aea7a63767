#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gtra/errors.hpp"
#include "gtra/scenario.hpp"
#include "gtra/solver.hpp"
#include "support.hpp"

using namespace gtra;
using testing::game;
using testing::sample_target;
using testing::target;

namespace {

GaParams small_ga() {
  GaParams p;
  p.population_size = 60;
  p.generations = 80;
  return p;
}

bool same(const SolveResult& a, const SolveResult& b) {
  return a.q_star.q == b.q_star.q && a.utility == b.utility &&
         a.per_iteration_utilities == b.per_iteration_utilities && a.seed == b.seed &&
         a.generations_used == b.generations_used;
}

}  // namespace

TEST_CASE("ga parameter validation") {
  GaParams p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.mutation_rate_for(50) == doctest::Approx(0.02));
  p.elitism_count = p.population_size;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = {};
  p.crossover_rate = 1.2;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = {};
  p.mutation_rate = -0.1;
  CHECK_THROWS_AS(p.validate(), ConfigError);
  p = {};
  p.mutation_scale = 0.0;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("repair scales uniformly onto the budget") {
  auto g = game({target(1, 1, 0.5, 0), target(1, 1, 0.25, 0)}, 0.5);
  std::vector<double> q{1.0, 1.0};
  repair_to_budget(g, q);
  CHECK(resource_consumption(g, q) == doctest::Approx(0.5));
  CHECK(q[0] == doctest::Approx(q[1]));
  CHECK(q[0] <= 1.0);
  std::vector<double> ok{0.2, 0.4};
  repair_to_budget(g, ok);
  CHECK(ok == std::vector<double>{0.2, 0.4});
}

TEST_CASE("zero budget returns all zeros") {
  auto g = game({sample_target(), target(3, 2, 0.1, 0.2), target(1, 1, 0.4, 0.1)}, 0.0);
  const auto r = ga_optimize(g, small_ga(), 99);
  CHECK(r.q_star.q == std::vector<double>(3, 0.0));
  const auto p = qr_attack_distribution(g, DefenseStrategy{r.q_star.q, true});
  double expected = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) expected -= p.p[i] * g.targets[i].attack_reward;
  CHECK(r.utility == doctest::Approx(expected).epsilon(1e-14));
  CHECK(iga_solve(g, 3, small_ga()).q_star.q == std::vector<double>(3, 0.0));
}

TEST_CASE("single target with cheap defense reaches full coverage") {
  auto g = game({target(2, 1, 0.01, 0.5)}, 1.0, 0.8, 1.5);
  // One-dimensional scan at step 1e-3 as the reference.
  double best_q = 0.0;
  double best_u = -1e300;
  for (int k = 0; k <= 1000; ++k) {
    const double q = k / 1000.0;
    const double u = qr_defender_utility(g, DefenseStrategy{{q}, true});
    if (u > best_u) {
      best_u = u;
      best_q = q;
    }
  }
  REQUIRE(best_q == 1.0);
  const auto r = iga_solve(g);
  CHECK(r.q_star.q[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.utility >= best_u - 1e-9);
}

TEST_CASE("determinism and thread independence") {
  ScenarioConfig cfg;
  cfg.n = 12;
  const auto g = sample_instance(cfg, 0);
  auto params = small_ga();
  const auto a = ga_optimize(g, params, 1234);
  const auto b = ga_optimize(g, params, 1234);
  CHECK(same(a, b));
  params.threads = 4;
  CHECK(same(a, ga_optimize(g, params, 1234)));
  CHECK_FALSE(same(a, ga_optimize(g, params, 1235)));
}

TEST_CASE("restart loop") {
  ScenarioConfig cfg;
  cfg.n = 8;
  cfg.scenario = Scenario::CmGreater;
  const auto g = sample_instance(cfg, 2);
  const auto params = small_ga();

  SUBCASE("one restart equals a single run with the derived seed") {
    CHECK(same(iga_solve(g, 1, params), ga_optimize(g, params, restart_seed(g, 0))));
  }
  SUBCASE("best of the restarts") {
    const auto r = iga_solve(g, 6, params);
    REQUIRE(r.per_iteration_utilities.size() == 6);
    CHECK(r.iterations_used == 6);
    CHECK(r.utility == *std::max_element(r.per_iteration_utilities.begin(),
                                         r.per_iteration_utilities.end()));
    double running = -1e300;
    for (double u : r.per_iteration_utilities) {
      const double next = std::max(running, u);
      CHECK(next >= running);
      running = next;
    }
    CHECK(std::abs(r.utility - qr_defender_utility(g, r.q_star)) <= 1e-9);
    CHECK(within_budget(g, r.q_star.q));
    CHECK(r.q_star.budget_feasible);
    for (double q : r.q_star.q) {
      CHECK(q >= 0.0);
      CHECK(q <= 1.0);
    }
  }
  SUBCASE("times must be positive") { CHECK_THROWS_AS(iga_solve(g, 0, params), ConfigError); }
}

TEST_CASE("feasibility across scenarios") {
  for (auto sc : {Scenario::CmGreater, Scenario::CaGreater, Scenario::Equal, Scenario::NoCost,
                  Scenario::HighSec}) {
    ScenarioConfig cfg;
    cfg.scenario = sc;
    cfg.n = 15;
    for (int i = 0; i < 3; ++i) {
      const auto g = sample_instance(cfg, i);
      const auto r = iga_solve(g, 2, small_ga());
      CHECK(resource_consumption(g, r.q_star.q) <= g.budget + 1e-9);
    }
  }
}

TEST_CASE("brute force oracle") {
  SUBCASE("three point scan") {
    auto g = game({sample_target()}, 10.0);
    const auto r = brute_force_solve(g, 0.5);
    double best = -1e300;
    double arg = -1;
    for (double q : {0.0, 0.5, 1.0}) {
      const double u = qr_defender_utility(g, DefenseStrategy{{q}, true});
      if (u > best) {
        best = u;
        arg = q;
      }
    }
    CHECK(r.q_star.q[0] == arg);
    CHECK(r.utility == best);
  }
  SUBCASE("zero budget") {
    auto g = game({sample_target(), sample_target()}, 0.0);
    CHECK(brute_force_solve(g, 0.1).q_star.q == std::vector<double>{0.0, 0.0});
  }
  SUBCASE("symmetric pair is permutation equivalent") {
    auto g = game({sample_target(), sample_target()}, 0.3, 0.8, 1.5);
    const auto r = brute_force_solve(g, 0.02);
    auto swapped = g;
    std::swap(swapped.targets[0], swapped.targets[1]);
    const auto s = brute_force_solve(swapped, 0.02);
    CHECK(r.utility == s.utility);
    // The mirrored point scores the same on the original instance.
    const double mirrored =
        qr_defender_utility(g, DefenseStrategy{{r.q_star.q[1], r.q_star.q[0]}, true});
    CHECK(mirrored == doctest::Approx(r.utility).epsilon(1e-14));
    CHECK(resource_consumption(g, r.q_star.q) <= 0.3 + 1e-12);
  }
  SUBCASE("capacity and argument guards") {
    std::vector<TargetParams> ts(6, sample_target());
    auto g = game(ts, 1.0);
    CHECK_THROWS_AS(brute_force_solve(g, 0.01), CapacityError);
    CHECK_THROWS_AS(brute_force_solve(g, 0.0), ConfigError);
    CHECK_THROWS_AS(brute_force_solve(g, 0.75), ConfigError);
  }
}

TEST_CASE("restarts agree with the oracle on small high-security games") {
  ScenarioConfig cfg;
  cfg.scenario = Scenario::HighSec;
  cfg.n = 2;
  cfg.gamma = 0.01;  // budget binds for two targets
  for (int i = 0; i < 3; ++i) {
    const auto g = sample_instance(cfg, i);
    const auto oracle = brute_force_solve(g, 0.01);
    const auto r = iga_solve(g);
    CHECK(r.utility >= oracle.utility - 1e-2);
  }
}
