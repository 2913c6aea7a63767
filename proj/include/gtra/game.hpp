#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gtra {

inline constexpr double kDefaultAlpha = 0.8;
inline constexpr double kDefaultLambda = 1.5;

// One protected asset. The penalty is stored as a magnitude; every sign is
// applied by the payoff formulas.
struct TargetParams {
  int id = 1;                     // 1-based
  double attack_reward = 0.0;     // R^a
  double attack_penalty = 0.0;    // P^a
  double defense_cost = 0.0;      // C^m
  double attack_cost = 0.0;       // C^a
  double defender_penalty = 0.0;  // P^m; recorded only, no utility reads it
};

// What one unit of q_i consumes from the budget.
enum class ResourceAccounting {
  DefenseCost,  // q_i * C^m_i
  Probability,  // q_i (cost-free games)
};

struct GameInstance {
  std::vector<TargetParams> targets;
  double budget = 0.0;  // M
  double alpha = kDefaultAlpha;
  double lambda = kDefaultLambda;
  std::uint64_t seed = 0;
  ResourceAccounting accounting = ResourceAccounting::DefenseCost;

  std::size_t size() const { return targets.size(); }

  // Budget weight of target i under the instance's accounting mode.
  double resource_weight(std::size_t i) const {
    return accounting == ResourceAccounting::Probability
               ? 1.0
               : targets[i].defense_cost;
  }
};

// Throws ConfigError when an invariant of the instance is violated.
void validate(const GameInstance& g);

struct DefenseStrategy {
  std::vector<double> q;
  bool budget_feasible = true;
};

struct AttackStrategy {
  std::vector<double> p;
  bool normalized = false;  // true for quantal response (sums to one)
};

struct PayoffPair {
  double attacker = 0.0;
  double defender = 0.0;
};

// One cell of the per-target 2x2 payoff matrix.
PayoffPair payoff_cell(const TargetParams& t, bool attacker_acts,
                       bool defender_acts, double alpha);

// Defender total utility, closed form:
//   sum_i q_i [alpha p_i (P_i + R_i) - C^m_i] - p_i R_i
double defender_utility(const GameInstance& g, const AttackStrategy& p,
                        const DefenseStrategy& q);

// Attacker total utility:
//   sum_i p_i [-alpha q_i (P_i + R_i) + (R_i - C^a_i)]
double attacker_utility(const GameInstance& g, const AttackStrategy& p,
                        const DefenseStrategy& q);

double per_target_attacker_utility(const TargetParams& t, double q_i,
                                   double alpha);

// Logit quantal response of the attacker to q, with max-shifted exponents.
AttackStrategy qr_attack_distribution(const GameInstance& g,
                                      const DefenseStrategy& q);

// Defender utility when the attacker plays the quantal response to q. The
// span overload is the allocation-free path the solvers evaluate.
double qr_defender_utility(const GameInstance& g, const DefenseStrategy& q);
double qr_defender_utility(const GameInstance& g, std::span<const double> q);

// Bang-bang maximizer of the attacker utility over the unit box; ties at
// zero utility resolve to "no attack".
AttackStrategy rational_best_response(const GameInstance& g,
                                      const DefenseStrategy& q);

// sum_i q_i * resource_weight(i)
double resource_consumption(const GameInstance& g, std::span<const double> q);

bool within_budget(const GameInstance& g, std::span<const double> q,
                   double tol = 1e-9);

}  // namespace gtra
