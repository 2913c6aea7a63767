#include <doctest.h>

#include <set>

#include "gtra/errors.hpp"
#include "gtra/scenario.hpp"

using namespace gtra;

namespace {

ScenarioConfig config(Scenario s, int n, double gamma = 0.1) {
  ScenarioConfig c;
  c.scenario = s;
  c.n = n;
  c.gamma = gamma;
  return c;
}

}  // namespace

TEST_CASE("names round trip") {
  for (auto s : {Scenario::CmGreater, Scenario::CaGreater, Scenario::Equal, Scenario::NoCost,
                 Scenario::HighSec}) {
    CHECK(parse_scenario(to_string(s)) == s);
  }
  CHECK_THROWS_AS(parse_scenario("Bogus"), ConfigError);
  for (auto a : {SweepAxis::N, SweepAxis::Gamma, SweepAxis::Alpha, SweepAxis::Lambda,
                 SweepAxis::BudgetFraction}) {
    CHECK(parse_sweep_axis(to_string(a)) == a);
  }
  CHECK_THROWS_AS(parse_sweep_axis("beta"), ConfigError);
}

TEST_CASE("config validation") {
  auto c = config(Scenario::HighSec, 10);
  CHECK_NOTHROW(c.validate());
  c.gamma = 1.5;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.gamma = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = config(Scenario::HighSec, 0);
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = config(Scenario::HighSec, 5);
  c.alpha = -0.1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = config(Scenario::HighSec, 5);
  c.budget_fraction = 1.5;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("sampled values stay in their intervals") {
  // 20 instances of 5000 targets give 1e5 draws per scenario.
  for (auto s : {Scenario::CmGreater, Scenario::CaGreater, Scenario::Equal, Scenario::NoCost,
                 Scenario::HighSec}) {
    const auto c = config(s, 5000, 0.1);
    for (int i = 0; i < 20; ++i) {
      const auto g = sample_instance(c, i);
      REQUIRE(g.size() == 5000);
      CHECK(g.budget == doctest::Approx(500.0));
      CHECK(g.alpha == c.alpha);
      CHECK(g.lambda == c.lambda);
      bool ok = true;
      for (std::size_t k = 0; k < g.size(); ++k) {
        const auto& t = g.targets[k];
        ok = ok && t.id == static_cast<int>(k + 1);
        switch (s) {
          case Scenario::HighSec:
            ok = ok && t.defense_cost >= 0.01 && t.defense_cost <= 0.02;
            ok = ok && t.attack_cost >= 0.02 && t.attack_cost <= 0.03;
            ok = ok && t.attack_penalty >= 1.4 && t.attack_penalty <= 1.6;
            ok = ok && t.attack_reward >= 0.9 && t.attack_reward <= 1.1;
            ok = ok && t.defender_penalty >= 0.4 && t.defender_penalty <= 0.6;
            ok = ok && t.attack_penalty > t.attack_reward;
            break;
          default:
            ok = ok && t.attack_reward >= 1 && t.attack_reward <= 10;
            ok = ok && t.attack_penalty >= 1 && t.attack_penalty <= 10;
            break;
        }
        switch (s) {
          case Scenario::CmGreater:
            ok = ok && t.defense_cost > 0.1 && t.defense_cost < 0.2;
            ok = ok && t.attack_cost > 0.0 && t.attack_cost < 0.1;
            ok = ok && t.defense_cost > t.attack_cost;
            break;
          case Scenario::CaGreater:
            ok = ok && t.defense_cost > 0.0 && t.defense_cost < 0.1;
            ok = ok && t.attack_cost > 0.1 && t.attack_cost < 0.2;
            ok = ok && t.attack_cost > t.defense_cost;
            break;
          case Scenario::Equal:
            ok = ok && t.defense_cost > 0.0 && t.defense_cost < 0.1;
            ok = ok && t.attack_cost == t.defense_cost;
            break;
          case Scenario::NoCost:
            ok = ok && t.defense_cost == 0.0 && t.attack_cost == 0.0;
            break;
          default:
            break;
        }
      }
      CHECK(ok);
      if (s == Scenario::NoCost) {
        CHECK(g.accounting == ResourceAccounting::Probability);
        CHECK_NOTHROW(validate(g));
      }
    }
  }
}

TEST_CASE("determinism and stream separation") {
  auto c = config(Scenario::CmGreater, 20);
  c.instances = 50;
  const auto a = sample_instance(c, 3);
  const auto b = sample_instance(c, 3);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a.targets[k].attack_reward == b.targets[k].attack_reward);
    CHECK(a.targets[k].defense_cost == b.targets[k].defense_cost);
  }
  CHECK(a.seed == b.seed);
  std::set<std::uint64_t> seeds;
  std::set<double> first_rewards;
  for (int i = 0; i < 50; ++i) {
    seeds.insert(instance_seed(c, i));
    first_rewards.insert(sample_instance(c, i).targets[0].attack_reward);
  }
  CHECK(seeds.size() == 50);
  CHECK(first_rewards.size() == 50);

  // Cost scenarios at the same index share their value draws.
  const auto cm = sample_instance(config(Scenario::CmGreater, 20), 4);
  const auto nc = sample_instance(config(Scenario::NoCost, 20), 4);
  for (std::size_t k = 0; k < cm.size(); ++k) {
    CHECK(cm.targets[k].attack_reward == nc.targets[k].attack_reward);
    CHECK(cm.targets[k].attack_penalty == nc.targets[k].attack_penalty);
  }
}

TEST_CASE("index bounds") {
  const auto c = config(Scenario::HighSec, 5);
  CHECK_THROWS_AS(sample_instance(c, c.instances), ConfigError);
  CHECK_THROWS_AS(sample_instance(c, -1), ConfigError);
}

TEST_CASE("budget fraction") {
  auto c = config(Scenario::CmGreater, 30);
  c.budget_fraction = 0.4;
  const auto g = sample_instance(c, 0);
  double total = 0.0;
  for (const auto& t : g.targets) total += t.defense_cost;
  CHECK(g.budget == doctest::Approx(0.4 * total));
}

TEST_CASE("sweep grids") {
  const auto base = config(Scenario::HighSec, 40);
  std::vector<double> lambdas;
  for (int k = 0; k <= 30; ++k) lambdas.push_back(0.5 * k);
  const auto lg = sweep_grid(base, SweepAxis::Lambda, lambdas);
  REQUIRE(lg.size() == 31);
  CHECK(lg[30].lambda == 15.0);
  CHECK(lg[3].n == 40);

  const std::vector<double> single{75};
  const auto ng = sweep_grid(base, SweepAxis::N, single);
  REQUIRE(ng.size() == 1);
  CHECK(ng[0].n == 75);
  CHECK(ng[0].gamma == base.gamma);
  CHECK(ng[0].scenario == base.scenario);

  const std::vector<double> alphas{0, 0.5, 1};
  const auto ag = sweep_grid(base, SweepAxis::Alpha, alphas);
  REQUIRE(ag.size() == 3);
  CHECK(ag[0].alpha == 0.0);
  CHECK(ag[1].alpha == 0.5);
  CHECK(ag[2].alpha == 1.0);
  CHECK(ag[0].master_seed != ag[1].master_seed);

  const std::vector<double> bad{0.5, 2.0};
  CHECK_THROWS_AS(sweep_grid(base, SweepAxis::Alpha, bad), ConfigError);
  const std::vector<double> fractional_n{10.5};
  CHECK_THROWS_AS(sweep_grid(base, SweepAxis::N, fractional_n), ConfigError);
  CHECK_THROWS_AS(sweep_grid(base, SweepAxis::Gamma, std::span<const double>{}), ConfigError);
}
