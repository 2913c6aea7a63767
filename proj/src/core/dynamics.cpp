#include "gtra/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gtra/errors.hpp"
#include "gtra/parallel.hpp"

namespace gtra {

double FieldValue::norm() const { return std::hypot(p_dot, q_dot); }

SimplifiedPayoffs reduce_payoffs(const TargetParams& t, double alpha) {
  const double r = t.attack_reward;
  const double pen = t.attack_penalty;
  return {-alpha * pen + (1.0 - alpha) * r - t.attack_cost,
          alpha * pen - (1.0 - alpha) * r - t.defense_cost,
          r - t.attack_cost,
          -r,
          -t.defense_cost};
}

FieldValue replicator_field(const SimplifiedPayoffs& sp, double p, double q) {
  return {p * (1.0 - p) * (q * sp.a + (1.0 - q) * sp.c),
          q * (1.0 - q) * (p * (sp.b - sp.d) + (1.0 - p) * sp.f)};
}

std::optional<EquilibriumPoint> interior_equilibrium(const SimplifiedPayoffs& sp) {
  const double q_den = sp.c - sp.a;
  const double p_den = (sp.b - sp.d) - sp.f;
  if (q_den == 0.0 || p_den == 0.0) return std::nullopt;
  const double q = sp.c / q_den;
  const double p = -sp.f / p_den;
  if (!(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0)) return std::nullopt;
  return EquilibriumPoint{p, q};
}

namespace {

double clip(double x, Trajectory& traj) {
  const double y = std::clamp(x, 0.0, 1.0);
  if (y != x) {
    ++traj.clip_count;
    traj.clip_magnitude += std::abs(x - y);
  }
  return y;
}

}  // namespace

Trajectory integrate_trajectory(const SimplifiedPayoffs& sp, double p0,
                                double q0, const IntegrationOptions& opts) {
  if (!(p0 >= 0.0 && p0 <= 1.0 && q0 >= 0.0 && q0 <= 1.0))
    throw ConfigError("initial point must lie in [0, 1]^2");
  if (!(opts.dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(opts.tol >= 0.0)) throw ConfigError("tol must be nonnegative");
  const std::size_t stride = std::max<std::size_t>(1, opts.record_every);

  Trajectory traj;
  traj.dt = opts.dt;
  double p = p0;
  double q = q0;
  double t = 0.0;
  traj.points.push_back({t, p, q});
  const double h = opts.dt;

  std::size_t step = 0;
  for (;; ++step) {
    const FieldValue k1 = replicator_field(sp, p, q);
    traj.final_field_norm = k1.norm();
    if (k1.norm() < opts.tol) {
      traj.terminated_early = true;
      traj.reason = Termination::Converged;
      break;
    }
    if (step == opts.max_steps) break;
    const FieldValue k2 =
        replicator_field(sp, p + 0.5 * h * k1.p_dot, q + 0.5 * h * k1.q_dot);
    const FieldValue k3 =
        replicator_field(sp, p + 0.5 * h * k2.p_dot, q + 0.5 * h * k2.q_dot);
    const FieldValue k4 = replicator_field(sp, p + h * k3.p_dot, q + h * k3.q_dot);
    const double p_next =
        p + h / 6.0 * (k1.p_dot + 2.0 * k2.p_dot + 2.0 * k3.p_dot + k4.p_dot);
    const double q_next =
        q + h / 6.0 * (k1.q_dot + 2.0 * k2.q_dot + 2.0 * k3.q_dot + k4.q_dot);
    if (!std::isfinite(p_next) || !std::isfinite(q_next)) {
      throw NumericError("non-finite state at step " + std::to_string(step + 1));
    }
    p = clip(p_next, traj);
    q = clip(q_next, traj);
    t = static_cast<double>(step + 1) * h;
    if ((step + 1) % stride == 0) traj.points.push_back({t, p, q});
  }
  traj.steps = step;
  if (traj.points.back().t != t) traj.points.push_back({t, p, q});
  return traj;
}

std::vector<Trajectory> phase_portrait(const SimplifiedPayoffs& sp, int grid,
                                       const IntegrationOptions& opts,
                                       unsigned threads) {
  if (grid < 2) throw ConfigError("phase portrait grid must be >= 2");
  const auto g = static_cast<std::size_t>(grid);
  std::vector<Trajectory> out(g * g);
  parallel_for(out.size(), threads, [&](std::size_t k) {
    const double p0 = static_cast<double>(k / g + 1) / static_cast<double>(g + 1);
    const double q0 = static_cast<double>(k % g + 1) / static_cast<double>(g + 1);
    out[k] = integrate_trajectory(sp, p0, q0, opts);
  });
  return out;
}

}  // namespace gtra
