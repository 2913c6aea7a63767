#pragma once

#include <cstdint>
#include <vector>

#include "gtra/harness/config.hpp"

namespace gtra::harness {

struct StrategyEvaluation {
  StrategyKind kind = StrategyKind::NE;
  DefenseStrategy strategy;
  double defender_utility = 0.0;  // QR defender utility at the realized q
  double attacker_utility = 0.0;  // attacker utility against its QR response
  double vulnerability = 0.0;
  double coverage = 0.0;
  double effectiveness = 0.0;
  double consumption = 0.0;
};

struct EvaluationOptions {
  int times = kDefaultRestarts;
  GaParams ga;
  std::uint64_t trials = 10000;
  OutcomeMode outcome_mode = OutcomeMode::Sampled;
  PartOnesOrder partones_order = PartOnesOrder::Index;
};

EvaluationOptions evaluation_options(const RunConfig& cfg);

DefenseStrategy build_strategy(const GameInstance& g, StrategyKind kind,
                               const EvaluationOptions& opts);

StrategyEvaluation evaluate_strategy(const GameInstance& g, StrategyKind kind,
                                     const EvaluationOptions& opts,
                                     std::uint64_t sampling_seed);

struct InstanceEvaluation {
  int instance = 0;
  double budget = 0.0;
  std::vector<StrategyEvaluation> results;  // in cfg.strategies order
};

// Evaluates every configured strategy on every instance of `scenario`.
// With shared draws all strategies see the same instance and the same
// outcome-sampling stream; otherwise each strategy gets its own. Instances
// run on `threads` workers and come back in index order.
std::vector<InstanceEvaluation> evaluate_scenario(const ScenarioConfig& scenario,
                                                  const RunConfig& cfg,
                                                  unsigned threads);

}  // namespace gtra::harness
