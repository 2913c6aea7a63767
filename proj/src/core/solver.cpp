#include "gtra/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gtra/errors.hpp"
#include "gtra/parallel.hpp"
#include "gtra/rng.hpp"

namespace gtra {

void GaParams::validate() const {
  if (population_size < 2) throw ConfigError("population_size must be >= 2");
  if (generations < 1) throw ConfigError("generations must be >= 1");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
    throw ConfigError("crossover_rate must lie in [0, 1]");
  if (mutation_rate && !(*mutation_rate >= 0.0 && *mutation_rate <= 1.0))
    throw ConfigError("mutation_rate must lie in [0, 1]");
  if (!(mutation_scale > 0.0)) throw ConfigError("mutation_scale must be > 0");
  if (elitism_count < 0 || elitism_count >= population_size)
    throw ConfigError("elitism_count must satisfy 0 <= elitism < population");
  if (stall_generations < 1) throw ConfigError("stall_generations must be >= 1");
  if (tournament_size < 1) throw ConfigError("tournament_size must be >= 1");
  if (!(blend_alpha >= 0.0)) throw ConfigError("blend_alpha must be >= 0");
}

double GaParams::mutation_rate_for(std::size_t n) const {
  return mutation_rate ? *mutation_rate : 1.0 / static_cast<double>(n);
}

void repair_to_budget(const GameInstance& g, std::vector<double>& q) {
  const double spent = resource_consumption(g, q);
  if (spent <= g.budget) return;
  const double factor = g.budget / spent;  // < 1 here
  for (double& v : q) v *= factor;
}

namespace {

// The budget admits only q = 0.
bool zero_is_only_feasible_point(const GameInstance& g) {
  if (g.budget > 0.0) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g.resource_weight(i) > 0.0)) return false;
  }
  return true;
}

SolveResult single_point_result(const GameInstance& g, std::vector<double> q,
                                std::uint64_t seed) {
  SolveResult r;
  r.utility = qr_defender_utility(g, q);
  r.q_star.q = std::move(q);
  r.q_star.budget_feasible = within_budget(g, r.q_star.q);
  r.iterations_used = 1;
  r.per_iteration_utilities = {r.utility};
  r.seed = seed;
  return r;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

class GeneticSearch {
 public:
  GeneticSearch(const GameInstance& g, const GaParams& params,
                std::uint64_t seed)
      : g_(g),
        params_(params),
        seed_(seed),
        n_(g.size()),
        pop_(static_cast<std::size_t>(params.population_size)),
        mutation_rate_(params.mutation_rate_for(g.size())),
        current_(pop_, std::vector<double>(n_)),
        next_(pop_, std::vector<double>(n_)),
        fitness_(pop_),
        next_fitness_(pop_),
        order_(pop_) {
    double total_weight = 0.0;
    for (std::size_t i = 0; i < n_; ++i) total_weight += g.resource_weight(i);
    density_ = total_weight > 0.0 ? std::min(1.0, g.budget / total_weight) : 1.0;
  }

  SolveResult run() {
    parallel_for(pop_, params_.threads, [&](std::size_t k) {
      Rng rng(derive_seed(seed_, 0, k));
      initialize(k, rng);
      fitness_[k] = qr_defender_utility(g_, current_[k]);
    });

    std::size_t best = argmax();
    std::vector<double> best_q = current_[best];
    double best_fit = fitness_[best];
    double stall_ref = best_fit;
    int stall = 0;
    int generations_run = 0;

    const auto elites = static_cast<std::size_t>(params_.elitism_count);
    for (int gen = 1; gen <= params_.generations; ++gen) {
      rank();
      for (std::size_t e = 0; e < elites; ++e) {
        next_[e] = current_[order_[e]];
        next_fitness_[e] = fitness_[order_[e]];
      }
      parallel_for(pop_ - elites, params_.threads, [&](std::size_t j) {
        const std::size_t k = elites + j;
        Rng rng(derive_seed(seed_, static_cast<std::uint64_t>(gen), k));
        breed(next_[k], rng);
        next_fitness_[k] = qr_defender_utility(g_, next_[k]);
      });
      std::swap(current_, next_);
      std::swap(fitness_, next_fitness_);
      generations_run = gen;

      const std::size_t top = argmax();
      if (fitness_[top] > best_fit) {
        best_fit = fitness_[top];
        best_q = current_[top];
      }
      if (best_fit >= stall_ref + 1e-9) {
        stall_ref = best_fit;
        stall = 0;
      } else if (++stall >= params_.stall_generations) {
        break;
      }
    }

    SolveResult r;
    r.utility = best_fit;
    r.q_star.q = std::move(best_q);
    r.q_star.budget_feasible = within_budget(g_, r.q_star.q);
    r.iterations_used = 1;
    r.per_iteration_utilities = {r.utility};
    r.seed = seed_;
    r.generations_used = generations_run;
    return r;
  }

 private:
  // The tail of the population holds constant allocations 0, 0.1, ..., 1;
  // slack budgets tend to have near-uniform optima that random genomes
  // rarely reach in high dimension.
  std::size_t level_count() const { return std::min<std::size_t>(11, pop_ / 4); }

  void initialize(std::size_t k, Rng& rng) {
    auto& q = current_[k];
    const std::size_t levels = level_count();
    if (levels >= 2 && k >= pop_ - levels) {
      const double level = static_cast<double>(k - (pop_ - levels)) /
                           static_cast<double>(levels - 1);
      std::fill(q.begin(), q.end(), level);
    } else if (k < pop_ / 2) {
      for (double& v : q) v = rng.uniform();
    } else {
      for (double& v : q) {
        const bool active = rng.uniform() < density_;
        const double value = rng.uniform();
        v = active ? value : 0.0;
      }
    }
    repair_to_budget(g_, q);
  }

  // Highest fitness first; equal fitness keeps index order.
  void rank() {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return fitness_[a] > fitness_[b];
                     });
  }

  std::size_t argmax() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pop_; ++k) {
      if (fitness_[k] > fitness_[best]) best = k;
    }
    return best;
  }

  std::size_t tournament(Rng& rng) const {
    std::size_t winner = rng.below(pop_);
    for (int t = 1; t < params_.tournament_size; ++t) {
      const std::size_t c = rng.below(pop_);
      if (fitness_[c] > fitness_[winner] ||
          (fitness_[c] == fitness_[winner] && c < winner)) {
        winner = c;
      }
    }
    return winner;
  }

  void breed(std::vector<double>& child, Rng& rng) const {
    const auto& a = current_[tournament(rng)];
    const auto& b = current_[tournament(rng)];
    if (rng.uniform() < params_.crossover_rate) {
      for (std::size_t i = 0; i < n_; ++i) {
        const double lo = std::min(a[i], b[i]);
        const double hi = std::max(a[i], b[i]);
        const double spread = params_.blend_alpha * (hi - lo);
        child[i] = clamp01(rng.uniform(lo - spread, hi + spread));
      }
    } else {
      child = a;
    }
    for (double& v : child) {
      if (rng.uniform() < mutation_rate_) {
        v = clamp01(v + rng.normal(0.0, params_.mutation_scale));
      }
    }
    repair_to_budget(g_, child);
  }

  const GameInstance& g_;
  const GaParams& params_;
  std::uint64_t seed_;
  std::size_t n_;
  std::size_t pop_;
  double mutation_rate_;
  double density_ = 1.0;
  std::vector<std::vector<double>> current_;
  std::vector<std::vector<double>> next_;
  std::vector<double> fitness_;
  std::vector<double> next_fitness_;
  std::vector<std::size_t> order_;
};

}  // namespace

SolveResult ga_optimize(const GameInstance& g, const GaParams& params,
                        std::uint64_t stream_seed) {
  validate(g);
  params.validate();
  if (zero_is_only_feasible_point(g)) {
    return single_point_result(g, std::vector<double>(g.size(), 0.0),
                               stream_seed);
  }
  return GeneticSearch(g, params, stream_seed).run();
}

std::uint64_t restart_seed(const GameInstance& g, int k) {
  return derive_seed(g.seed, static_cast<std::uint64_t>(k));
}

SolveResult iga_solve(const GameInstance& g, int times,
                      const GaParams& params) {
  if (times < 1) throw ConfigError("times must be >= 1");
  SolveResult best;
  best.utility = -std::numeric_limits<double>::infinity();
  std::vector<double> history;
  int generations = 0;
  for (int k = 0; k < times; ++k) {
    SolveResult run = ga_optimize(g, params, restart_seed(g, k));
    history.push_back(run.utility);
    generations += run.generations_used;
    if (run.utility > best.utility) best = std::move(run);
  }
  best.iterations_used = times;
  best.per_iteration_utilities = std::move(history);
  best.generations_used = generations;
  return best;
}

SolveResult brute_force_solve(const GameInstance& g, double grid_step) {
  validate(g);
  if (!(grid_step > 0.0 && grid_step <= 0.5))
    throw ConfigError("grid_step must lie in (0, 0.5]");

  std::vector<double> levels;
  const auto steps = static_cast<std::size_t>(std::floor(1.0 / grid_step + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) {
    levels.push_back(std::min(1.0, static_cast<double>(k) * grid_step));
  }
  if (levels.back() < 1.0 - 1e-12) levels.push_back(1.0);
  if (std::abs(levels.back() - 1.0) <= 1e-12) levels.back() = 1.0;

  const double grid_size =
      std::pow(static_cast<double>(levels.size()), static_cast<double>(g.size()));
  if (grid_size > kMaxOracleGridPoints) {
    throw CapacityError("oracle grid of " + std::to_string(grid_size) +
                        " points exceeds the limit for N = " +
                        std::to_string(g.size()));
  }

  const std::size_t n = g.size();
  std::vector<std::size_t> index(n, 0);
  std::vector<double> q(n, 0.0);
  std::vector<double> best_q(n, 0.0);
  double best = -std::numeric_limits<double>::infinity();
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) q[i] = levels[index[i]];
    if (resource_consumption(g, q) <= g.budget + 1e-12) {
      const double u = qr_defender_utility(g, q);
      if (u > best) {
        best = u;
        best_q = q;
      }
    }
    std::size_t d = 0;
    while (d < n && ++index[d] == levels.size()) index[d++] = 0;
    if (d == n) break;
  }
  if (best == -std::numeric_limits<double>::infinity()) {
    std::fill(best_q.begin(), best_q.end(), 0.0);
  }
  return single_point_result(g, std::move(best_q), 0);
}

}  // namespace gtra
