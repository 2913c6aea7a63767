#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gtra/game.hpp"

namespace gtra {

// Real-coded GA settings. These are artifact choices, not tuned constants
// from any reference implementation.
struct GaParams {
  int population_size = 200;
  int generations = 300;
  double crossover_rate = 0.9;
  std::optional<double> mutation_rate;  // per gene; unset means 1/N
  double mutation_scale = 0.1;          // Gaussian sigma, in units of q
  int elitism_count = 2;
  int stall_generations = 50;
  int tournament_size = 3;
  double blend_alpha = 0.5;  // BLX-alpha
  unsigned threads = 1;      // population evaluation workers

  void validate() const;
  double mutation_rate_for(std::size_t n) const;
};

struct SolveResult {
  DefenseStrategy q_star;
  double utility = 0.0;  // Ud* = qr_defender_utility(g, q_star)
  int iterations_used = 0;
  std::vector<double> per_iteration_utilities;
  std::uint64_t seed = 0;   // stream seed of the run that produced q_star
  int generations_used = 0;
};

inline constexpr int kDefaultRestarts = 10;

// Projects q onto the budget by uniform scaling when it overspends.
void repair_to_budget(const GameInstance& g, std::vector<double>& q);

// One GA run maximizing the QR defender utility under the budget.
SolveResult ga_optimize(const GameInstance& g, const GaParams& params,
                        std::uint64_t stream_seed);

// Sub-seed for restart k of an instance: derive_seed(g.seed, k).
std::uint64_t restart_seed(const GameInstance& g, int k);

// `times` restarts of ga_optimize keeping the best (Ud* starts at -inf).
SolveResult iga_solve(const GameInstance& g, int times = kDefaultRestarts,
                      const GaParams& params = {});

// Exhaustive scan of {0, step, ..., 1}^N. Used as an oracle for small N.
SolveResult brute_force_solve(const GameInstance& g, double grid_step);

inline constexpr double kMaxOracleGridPoints = 2e7;

}  // namespace gtra
