#include "gtra/game.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gtra/errors.hpp"

namespace gtra {
namespace {

void require_size(const GameInstance& g, std::size_t n, const char* what) {
  if (n != g.size()) {
    throw DimensionError(std::string(what) + " has length " +
                         std::to_string(n) + ", expected " +
                         std::to_string(g.size()));
  }
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void validate(const GameInstance& g) {
  if (g.targets.empty()) throw ConfigError("game needs at least one target");
  if (!(g.alpha >= 0.0 && g.alpha <= 1.0))
    throw ConfigError("alpha must lie in [0, 1]");
  if (!(g.lambda >= 0.0) || !finite(g.lambda))
    throw ConfigError("lambda must be a finite nonnegative number");
  if (!(g.budget >= 0.0) || !finite(g.budget))
    throw ConfigError("budget must be a finite nonnegative number");
  for (const auto& t : g.targets) {
    const auto where = "target " + std::to_string(t.id) + ": ";
    if (!finite(t.attack_reward) || !finite(t.attack_penalty) ||
        !finite(t.defense_cost) || !finite(t.attack_cost))
      throw ConfigError(where + "values must be finite");
    if (t.attack_reward < 0.0 || t.attack_penalty < 0.0 || t.attack_cost < 0.0)
      throw ConfigError(where + "reward, penalty and attack cost must be >= 0");
    const bool cost_free = g.accounting == ResourceAccounting::Probability;
    if (cost_free ? t.defense_cost < 0.0 : !(t.defense_cost > 0.0))
      throw ConfigError(where + "defense cost must be positive");
  }
}

PayoffPair payoff_cell(const TargetParams& t, bool attacker_acts,
                       bool defender_acts, double alpha) {
  const double r = t.attack_reward;
  const double pen = t.attack_penalty;
  if (attacker_acts && defender_acts) {
    return {-alpha * pen + (1.0 - alpha) * r - t.attack_cost,
            alpha * pen - (1.0 - alpha) * r - t.defense_cost};
  }
  if (attacker_acts) return {r - t.attack_cost, -r};
  if (defender_acts) return {0.0, -t.defense_cost};
  return {0.0, 0.0};
}

double defender_utility(const GameInstance& g, const AttackStrategy& p,
                        const DefenseStrategy& q) {
  require_size(g, p.p.size(), "attack strategy");
  require_size(g, q.q.size(), "defense strategy");
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& t = g.targets[i];
    total += q.q[i] * (g.alpha * p.p[i] * (t.attack_penalty + t.attack_reward) -
                       t.defense_cost) -
             p.p[i] * t.attack_reward;
  }
  return total;
}

double attacker_utility(const GameInstance& g, const AttackStrategy& p,
                        const DefenseStrategy& q) {
  require_size(g, p.p.size(), "attack strategy");
  require_size(g, q.q.size(), "defense strategy");
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    total += p.p[i] * per_target_attacker_utility(g.targets[i], q.q[i], g.alpha);
  }
  return total;
}

double per_target_attacker_utility(const TargetParams& t, double q_i,
                                   double alpha) {
  return -alpha * q_i * (t.attack_penalty + t.attack_reward) +
         (t.attack_reward - t.attack_cost);
}

namespace {

double max_exponent(const GameInstance& g, std::span<const double> q) {
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double e =
        g.lambda * per_target_attacker_utility(g.targets[i], q[i], g.alpha);
    if (!std::isfinite(e)) {
      throw NumericError("non-finite QR exponent at target " +
                         std::to_string(g.targets[i].id));
    }
    if (e > top) top = e;
  }
  return top;
}

}  // namespace

AttackStrategy qr_attack_distribution(const GameInstance& g,
                                      const DefenseStrategy& q) {
  require_size(g, q.q.size(), "defense strategy");
  const double shift = max_exponent(g, q.q);
  AttackStrategy out;
  out.normalized = true;
  out.p.resize(g.size());
  double z = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.p[i] = std::exp(
        g.lambda * per_target_attacker_utility(g.targets[i], q.q[i], g.alpha) -
        shift);
    z += out.p[i];
  }
  for (double& v : out.p) v /= z;
  return out;
}

double qr_defender_utility(const GameInstance& g, const DefenseStrategy& q) {
  require_size(g, q.q.size(), "defense strategy");
  return qr_defender_utility(g, std::span<const double>(q.q));
}

double qr_defender_utility(const GameInstance& g, std::span<const double> q) {
  if (q.size() != g.size()) require_size(g, q.size(), "defense strategy");
  const double shift = max_exponent(g, q);
  double z = 0.0;
  double weighted = 0.0;
  double spend = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& t = g.targets[i];
    const double protected_gain =
        g.alpha * q[i] * (t.attack_penalty + t.attack_reward);
    const double w = std::exp(
        g.lambda * (t.attack_reward - t.attack_cost - protected_gain) - shift);
    z += w;
    weighted += w * (protected_gain - t.attack_reward);
    spend += q[i] * t.defense_cost;
  }
  return weighted / z - spend;
}

AttackStrategy rational_best_response(const GameInstance& g,
                                      const DefenseStrategy& q) {
  require_size(g, q.q.size(), "defense strategy");
  AttackStrategy out;
  out.normalized = false;
  out.p.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.p[i] =
        per_target_attacker_utility(g.targets[i], q.q[i], g.alpha) > 0.0 ? 1.0
                                                                         : 0.0;
  }
  return out;
}

double resource_consumption(const GameInstance& g, std::span<const double> q) {
  require_size(g, q.size(), "defense strategy");
  double total = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) total += q[i] * g.resource_weight(i);
  return total;
}

bool within_budget(const GameInstance& g, std::span<const double> q,
                   double tol) {
  return resource_consumption(g, q) <= g.budget + tol;
}

}  // namespace gtra
