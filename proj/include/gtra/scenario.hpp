#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtra/game.hpp"

namespace gtra {

enum class Scenario { CmGreater, CaGreater, Equal, NoCost, HighSec };

std::string_view to_string(Scenario s);
Scenario parse_scenario(std::string_view name);  // throws ConfigError

struct ScenarioConfig {
  Scenario scenario = Scenario::HighSec;
  int n = 50;
  double gamma = 0.1;  // M = gamma * N unless budget_fraction is set
  double alpha = kDefaultAlpha;
  double lambda = kDefaultLambda;
  int instances = 20;
  std::uint64_t master_seed = 1;
  // When set, M = fraction * (resources needed to protect every target).
  std::optional<double> budget_fraction;

  void validate() const;
};

// Seed of instance `index`: derive_seed(master_seed, index).
std::uint64_t instance_seed(const ScenarioConfig& cfg, int index);

// Rewards and penalties come from one sub-stream and costs from another,
// so the same (master_seed, index) yields the same R/P draws under every
// scenario.
GameInstance sample_instance(const ScenarioConfig& cfg, int index);

enum class SweepAxis { N, Gamma, Alpha, Lambda, BudgetFraction };

std::string_view to_string(SweepAxis a);
SweepAxis parse_sweep_axis(std::string_view name);  // throws ConfigError

// One config per value with the axis field overridden; grid point k gets
// master_seed = derive_seed(base.master_seed, k).
std::vector<ScenarioConfig> sweep_grid(const ScenarioConfig& base, SweepAxis axis,
                                       std::span<const double> values);

}  // namespace gtra
