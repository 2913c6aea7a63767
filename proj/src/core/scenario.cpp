#include "gtra/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "gtra/errors.hpp"
#include "gtra/rng.hpp"

namespace gtra {
namespace {

constexpr std::uint64_t kValueStream = 1;
constexpr std::uint64_t kCostStream = 2;
constexpr std::uint64_t kDefenderPenaltyStream = 3;
constexpr std::uint64_t kSolverStream = 4;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::CmGreater: return "CmGreater";
    case Scenario::CaGreater: return "CaGreater";
    case Scenario::Equal: return "Equal";
    case Scenario::NoCost: return "NoCost";
    case Scenario::HighSec: return "HighSec";
  }
  return "?";
}

Scenario parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::CmGreater, Scenario::CaGreater, Scenario::Equal,
                     Scenario::NoCost, Scenario::HighSec}) {
    if (name == to_string(s)) return s;
  }
  throw ConfigError("unknown scenario '" + std::string(name) +
                    "' (expected CmGreater, CaGreater, Equal, NoCost or HighSec)");
}

void ScenarioConfig::validate() const {
  if (n < 1) throw ConfigError("n = " + std::to_string(n) + " must be >= 1");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw ConfigError("gamma = " + num(gamma) +
                      " violates 0 < gamma <= 1 (budget must stay below the "
                      "number of targets, gamma < 1)");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw ConfigError("alpha = " + num(alpha) + " must lie in [0, 1]");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw ConfigError("lambda = " + num(lambda) + " must be finite and >= 0");
  if (instances < 1)
    throw ConfigError("instances = " + std::to_string(instances) +
                      " must be >= 1");
  if (budget_fraction && !(*budget_fraction >= 0.0 && *budget_fraction <= 1.0))
    throw ConfigError("budget_fraction = " + num(*budget_fraction) +
                      " must lie in [0, 1]");
}

std::uint64_t instance_seed(const ScenarioConfig& cfg, int index) {
  return derive_seed(cfg.master_seed, static_cast<std::uint64_t>(index));
}

GameInstance sample_instance(const ScenarioConfig& cfg, int index) {
  cfg.validate();
  if (index < 0 || index >= cfg.instances) {
    throw ConfigError("instance index " + std::to_string(index) +
                      " outside [0, " + std::to_string(cfg.instances) + ")");
  }
  const std::uint64_t seed = instance_seed(cfg, index);
  Rng values(derive_seed(seed, kValueStream));
  Rng costs(derive_seed(seed, kCostStream));
  Rng defender_penalties(derive_seed(seed, kDefenderPenaltyStream));

  GameInstance g;
  g.alpha = cfg.alpha;
  g.lambda = cfg.lambda;
  g.seed = derive_seed(seed, kSolverStream);
  g.targets.resize(static_cast<std::size_t>(cfg.n));
  const double gamma = cfg.gamma;

  for (std::size_t i = 0; i < g.targets.size(); ++i) {
    auto& t = g.targets[i];
    t.id = static_cast<int>(i) + 1;
    if (cfg.scenario == Scenario::HighSec) {
      t.attack_reward = values.uniform(0.9, 1.1);
      t.attack_penalty = values.uniform(1.4, 1.6);
    } else {
      t.attack_reward = values.uniform(1.0, 10.0);
      t.attack_penalty = values.uniform(1.0, 10.0);
    }
    switch (cfg.scenario) {
      case Scenario::CmGreater:
        t.defense_cost = costs.uniform(gamma, 2.0 * gamma);
        t.attack_cost = costs.uniform(0.0, gamma);
        break;
      case Scenario::CaGreater:
        t.defense_cost = costs.uniform(0.0, gamma);
        t.attack_cost = costs.uniform(gamma, 2.0 * gamma);
        break;
      case Scenario::Equal:
        t.defense_cost = costs.uniform(0.0, gamma);
        t.attack_cost = t.defense_cost;
        break;
      case Scenario::NoCost:
        t.defense_cost = 0.0;
        t.attack_cost = 0.0;
        break;
      case Scenario::HighSec:
        t.defense_cost = costs.uniform(0.01, 0.02);
        t.attack_cost = costs.uniform(0.02, 0.03);
        t.defender_penalty = defender_penalties.uniform(0.4, 0.6);
        break;
    }
  }

  if (cfg.scenario == Scenario::NoCost) {
    g.accounting = ResourceAccounting::Probability;
  }
  if (cfg.budget_fraction) {
    double full = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) full += g.resource_weight(i);
    g.budget = *cfg.budget_fraction * full;
  } else {
    g.budget = gamma * static_cast<double>(cfg.n);
  }
  return g;
}

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::N: return "N";
    case SweepAxis::Gamma: return "gamma";
    case SweepAxis::Alpha: return "alpha";
    case SweepAxis::Lambda: return "lambda";
    case SweepAxis::BudgetFraction: return "budget_fraction";
  }
  return "?";
}

SweepAxis parse_sweep_axis(std::string_view name) {
  for (SweepAxis a : {SweepAxis::N, SweepAxis::Gamma, SweepAxis::Alpha,
                      SweepAxis::Lambda, SweepAxis::BudgetFraction}) {
    if (name == to_string(a)) return a;
  }
  throw ConfigError("unknown sweep axis '" + std::string(name) +
                    "' (expected N, gamma, alpha, lambda or budget_fraction)");
}

std::vector<ScenarioConfig> sweep_grid(const ScenarioConfig& base, SweepAxis axis,
                                       std::span<const double> values) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  std::vector<ScenarioConfig> out;
  out.reserve(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    ScenarioConfig cfg = base;
    const double v = values[k];
    switch (axis) {
      case SweepAxis::N:
        if (!(v >= 1.0) || v != std::floor(v) || v > 1e9)
          throw ConfigError("N = " + num(v) + " must be a positive integer");
        cfg.n = static_cast<int>(v);
        break;
      case SweepAxis::Gamma: cfg.gamma = v; break;
      case SweepAxis::Alpha: cfg.alpha = v; break;
      case SweepAxis::Lambda: cfg.lambda = v; break;
      case SweepAxis::BudgetFraction: cfg.budget_fraction = v; break;
    }
    cfg.master_seed = derive_seed(base.master_seed, k);
    cfg.validate();
    out.push_back(cfg);
  }
  return out;
}

}  // namespace gtra
