#include "gtra/harness/experiment.hpp"

#include "gtra/metrics.hpp"
#include "gtra/parallel.hpp"
#include "gtra/rng.hpp"

namespace gtra::harness {
namespace {

constexpr std::uint64_t kRandStream = 0x52414e44;      // "RAND"
constexpr std::uint64_t kSamplingStream = 0x53414d50;  // "SAMP"
constexpr std::uint64_t kUnsharedStream = 0x554e5348;  // "UNSH"

std::uint64_t strategy_index(StrategyKind kind) {
  return static_cast<std::uint64_t>(kind);
}

}  // namespace

EvaluationOptions evaluation_options(const RunConfig& cfg) {
  EvaluationOptions o;
  o.times = cfg.times;
  o.ga = cfg.ga;
  o.ga.threads = 1;
  o.trials = cfg.trials;
  o.outcome_mode = cfg.outcome_mode;
  o.partones_order = cfg.partones_order;
  return o;
}

DefenseStrategy build_strategy(const GameInstance& g, StrategyKind kind,
                               const EvaluationOptions& opts) {
  switch (kind) {
    case StrategyKind::NE: return ne_strategy(g, opts.times, opts.ga);
    case StrategyKind::PartOneS: return part_ones(g, opts.partones_order);
    case StrategyKind::Rand: return rand_strategy(g, derive_seed(g.seed, kRandStream));
    case StrategyKind::Average: return average_strategy(g);
    case StrategyKind::AllOneS: return all_ones(g);
  }
  return all_ones(g);
}

StrategyEvaluation evaluate_strategy(const GameInstance& g, StrategyKind kind,
                                     const EvaluationOptions& opts,
                                     std::uint64_t sampling_seed) {
  StrategyEvaluation e;
  e.kind = kind;
  e.strategy = build_strategy(g, kind, opts);
  const AttackStrategy response = qr_attack_distribution(g, e.strategy);
  e.defender_utility = qr_defender_utility(g, e.strategy);
  e.attacker_utility = attacker_utility(g, response, e.strategy);
  e.consumption = consumed_resources(g, e.strategy);
  if (opts.outcome_mode == OutcomeMode::Sampled) {
    const OutcomeCounts c =
        sample_outcomes(g, response, e.strategy, opts.trials, sampling_seed);
    e.vulnerability = vulnerability(c);
    e.coverage = coverage(c);
    e.effectiveness = effectiveness(c, e.consumption);
  } else {
    const ExpectedOutcomes c = expected_outcomes(g, response, e.strategy);
    e.vulnerability = vulnerability(c);
    e.coverage = coverage(c);
    e.effectiveness = effectiveness(c, e.consumption);
  }
  return e;
}

std::vector<InstanceEvaluation> evaluate_scenario(const ScenarioConfig& scenario,
                                                  const RunConfig& cfg,
                                                  unsigned threads) {
  const EvaluationOptions opts = evaluation_options(cfg);
  std::vector<InstanceEvaluation> out(static_cast<std::size_t>(scenario.instances));
  parallel_for(out.size(), threads, [&](std::size_t k) {
    const int index = static_cast<int>(k);
    InstanceEvaluation& row = out[k];
    row.instance = index;
    const GameInstance shared = sample_instance(scenario, index);
    row.budget = shared.budget;
    for (StrategyKind kind : cfg.strategies) {
      if (cfg.shared_draws) {
        row.results.push_back(evaluate_strategy(
            shared, kind, opts, derive_seed(shared.seed, kSamplingStream)));
      } else {
        ScenarioConfig own = scenario;
        own.master_seed =
            derive_seed(scenario.master_seed, kUnsharedStream, strategy_index(kind));
        const GameInstance g = sample_instance(own, index);
        row.results.push_back(evaluate_strategy(
            g, kind, opts, derive_seed(g.seed, kSamplingStream)));
      }
    }
  });
  return out;
}

}  // namespace gtra::harness
