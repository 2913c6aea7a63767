#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gtra/game.hpp"

namespace gtra {

// Per-target payoffs in reduced form. Row "attack": (a, b) when protected,
// (c, d) when not; row "no attack": (0, f) and (0, 0).
struct SimplifiedPayoffs {
  double a = 0.0;  // -alpha P + (1 - alpha) R - C^a
  double b = 0.0;  //  alpha P - (1 - alpha) R - C^m
  double c = 0.0;  //  R - C^a
  double d = 0.0;  // -R
  double f = 0.0;  // -C^m
};

struct FieldValue {
  double p_dot = 0.0;
  double q_dot = 0.0;
  double norm() const;
};

struct PhasePoint {
  double t = 0.0;
  double p = 0.0;
  double q = 0.0;
};

enum class Termination { Converged, MaxSteps };

struct Trajectory {
  std::vector<PhasePoint> points;
  double dt = 0.0;
  bool terminated_early = false;
  Termination reason = Termination::MaxSteps;
  std::size_t steps = 0;
  std::size_t clip_count = 0;     // steps that left the unit square
  double clip_magnitude = 0.0;    // total distance moved back by clipping
  double final_field_norm = 0.0;
};

struct IntegrationOptions {
  double dt = 1e-3;
  std::size_t max_steps = 1'000'000;
  double tol = 1e-8;  // field-norm stop; 0 integrates all max_steps
  std::size_t record_every = 1;  // keep every k-th state (first and last kept)
};

SimplifiedPayoffs reduce_payoffs(const TargetParams& t, double alpha);

// p' = p(1-p)[q a + (1-q) c],  q' = q(1-q)[p (b - d) + (1-p) f]
FieldValue replicator_field(const SimplifiedPayoffs& sp, double p, double q);

struct EquilibriumPoint {
  double p = 0.0;
  double q = 0.0;
};

// The fixed point with both coordinates strictly inside (0, 1), if any.
std::optional<EquilibriumPoint> interior_equilibrium(const SimplifiedPayoffs& sp);

// Classical RK4 on the replicator field, clipped to the unit square.
Trajectory integrate_trajectory(const SimplifiedPayoffs& sp, double p0,
                                double q0, const IntegrationOptions& opts = {});

// Trajectories from the interior lattice {1/(grid+1), ..., grid/(grid+1)}^2,
// outer loop over p0, inner over q0.
std::vector<Trajectory> phase_portrait(const SimplifiedPayoffs& sp, int grid,
                                       const IntegrationOptions& opts = {},
                                       unsigned threads = 1);

}  // namespace gtra
