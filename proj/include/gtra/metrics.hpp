#pragma once

#include <cstdint>

#include "gtra/game.hpp"

namespace gtra {

// Tallies of the attack x protect outcome cells over all trials and targets.
struct OutcomeCounts {
  std::uint64_t ap = 0;  // attacked, protected
  std::uint64_t af = 0;  // attacked, protection failed or absent
  std::uint64_t np = 0;  // not attacked, protected
  std::uint64_t nf = 0;  // not attacked, not protected
  std::uint64_t trials = 0;
  std::uint64_t n = 0;  // targets per trial

  OutcomeCounts& operator+=(const OutcomeCounts& o);
  friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;
};

// Expected cell counts of a single trial (no sampling noise).
struct ExpectedOutcomes {
  double ap = 0.0;
  double af = 0.0;
  double np = 0.0;
  double nf = 0.0;
  double trials = 1.0;
  double n = 0.0;
};

inline constexpr std::uint64_t kTrialsPerBlock = 1024;

// Independent Bernoulli attack and protection per target per trial. Trials
// are split in fixed blocks with their own sub-streams, so the counts do not
// depend on `threads`. Every (trial, target) consumes exactly two uniforms,
// attack first, which couples runs that share a seed.
OutcomeCounts sample_outcomes(const GameInstance& g, const AttackStrategy& p,
                              const DefenseStrategy& q, std::uint64_t trials,
                              std::uint64_t stream_seed, unsigned threads = 1);

ExpectedOutcomes expected_outcomes(const GameInstance& g,
                                   const AttackStrategy& p,
                                   const DefenseStrategy& q);

// (success - failure) / (success + failure) with success = AF, failure = AP.
// No attacks at all counts as -1.
double vulnerability(const OutcomeCounts& c);
double vulnerability(const ExpectedOutcomes& c);

// (AP + NP + NF) / (trials * n)
double coverage(const OutcomeCounts& c);
double coverage(const ExpectedOutcomes& c);

double consumed_resources(const GameInstance& g, const DefenseStrategy& q);

// Protected targets per trial divided by resources. Zero resources give 0
// when nothing is covered and +infinity otherwise.
double effectiveness(const OutcomeCounts& c, double resources);
double effectiveness(const ExpectedOutcomes& c, double resources);

// (a - b) / b; throws DivisionError when b == 0.
double growth_rate(double a, double b);

}  // namespace gtra
