#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gtra/baselines.hpp"
#include "gtra/dynamics.hpp"
#include "gtra/game.hpp"
#include "gtra/scenario.hpp"
#include "gtra/solver.hpp"

namespace gtra::harness {

enum class OutcomeMode { Sampled, Expected };
enum class StrategyKind { NE, PartOneS, Rand, Average, AllOneS };

inline constexpr StrategyKind kAllStrategies[] = {
    StrategyKind::NE, StrategyKind::PartOneS, StrategyKind::Rand,
    StrategyKind::Average, StrategyKind::AllOneS};

std::string_view to_string(StrategyKind s);
StrategyKind parse_strategy(std::string_view name);
std::string_view to_string(OutcomeMode m);

// Largest N accepted without --paper-scale.
inline constexpr int kDeskScaleMaxTargets = 200;
inline constexpr int kPaperScaleInstances = 100;

struct DynamicsConfig {
  TargetParams target;
  double alpha = kDefaultAlpha;
  int grid = 5;
  IntegrationOptions integration{1e-3, 1'000'000, 1e-8, 1000};
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::Lambda;
  std::string values;  // range expression as given
};

// "start:stop:step" (inclusive), "a,b,c" or a single number.
std::vector<double> parse_range(std::string_view expr);

// Fully resolved run configuration. Everything that influences CSV bytes
// lives here; thread count and output directory do not.
struct RunConfig {
  ScenarioConfig scenario;
  std::vector<int> n_values;  // compare grid over N; empty means {scenario.n}
  std::optional<GameInstance> game;  // explicit instance for `solve`
  int instance_index = 0;
  GaParams ga;
  int times = kDefaultRestarts;
  std::uint64_t trials = 10000;
  OutcomeMode outcome_mode = OutcomeMode::Sampled;
  bool shared_draws = true;
  PartOnesOrder partones_order = PartOnesOrder::Index;
  std::vector<StrategyKind> strategies{std::begin(kAllStrategies),
                                       std::end(kAllStrategies)};
  std::optional<DynamicsConfig> dynamics;
  std::optional<SweepSpec> sweep;
  bool paper_scale = false;

  std::vector<int> compare_n_values() const;
};

// Parses a config document (or a run manifest, whose "config" member is
// used). Errors carry "<path>:<line>:" prefixes.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view text, const std::string& origin);

// Field rules plus the desk-scale N cap. parse_config checks only the
// field rules, so --paper-scale can still be applied after loading.
void validate(const RunConfig& cfg);

void apply_paper_scale(RunConfig& cfg);

nlohmann::ordered_json to_json(const RunConfig& cfg);

// FNV-1a 64 over the canonical JSON dump of the resolved config.
std::uint64_t config_digest(const RunConfig& cfg);

}  // namespace gtra::harness
