#include <doctest.h>

#include <cmath>

#include "gtra/dynamics.hpp"
#include "support.hpp"

using namespace gtra;
using testing::sample_target;
using testing::target;

namespace {

const SimplifiedPayoffs kSp{-0.9, 0.1, 1.5, -2.0, -0.3};

PhasePoint one_step(double h, std::size_t substeps) {
  IntegrationOptions o;
  o.dt = h / static_cast<double>(substeps);
  o.max_steps = substeps;
  o.tol = 0.0;
  return integrate_trajectory(kSp, 0.5, 0.5, o).points.back();
}

}  // namespace

TEST_CASE("payoff reduction") {
  const auto sp = reduce_payoffs(sample_target(), 0.8);
  CHECK(sp.a == doctest::Approx(-0.9));
  CHECK(sp.b == doctest::Approx(0.1));
  CHECK(sp.c == doctest::Approx(1.5));
  CHECK(sp.d == doctest::Approx(-2.0));
  CHECK(sp.f == doctest::Approx(-0.3));
  CHECK(reduce_payoffs(target(2, 1, 0.3, 2), 0.8).c == 0.0);
  CHECK(reduce_payoffs(target(2, 1, 0.0, 0.5), 0.8).f == 0.0);

  Rng rng(8);
  for (int k = 0; k < 1000; ++k) {
    const auto t = target(rng.uniform(0, 10), rng.uniform(0, 10), rng.uniform(0, 2), rng.uniform(0, 2));
    const double alpha = rng.uniform();
    const auto r = reduce_payoffs(t, alpha);
    CHECK(std::abs(r.a - payoff_cell(t, true, true, alpha).attacker) <= 1e-12);
    CHECK(std::abs(r.b - payoff_cell(t, true, true, alpha).defender) <= 1e-12);
    CHECK(std::abs(r.c - payoff_cell(t, true, false, alpha).attacker) <= 1e-12);
    CHECK(std::abs(r.d - payoff_cell(t, true, false, alpha).defender) <= 1e-12);
    CHECK(std::abs(r.f - payoff_cell(t, false, true, alpha).defender) <= 1e-12);
    CHECK(r.d <= 0.0);
    CHECK(r.f <= 0.0);
  }
}

TEST_CASE("replicator field") {
  const auto v = replicator_field(kSp, 0.5, 0.5);
  CHECK(v.p_dot == doctest::Approx(0.075).epsilon(1e-14));
  CHECK(v.q_dot == doctest::Approx(0.225).epsilon(1e-14));
  for (double x : {0.0, 0.3, 0.77, 1.0}) {
    CHECK(replicator_field(kSp, 0.0, x).p_dot == 0.0);
    CHECK(replicator_field(kSp, 1.0, x).p_dot == 0.0);
    CHECK(replicator_field(kSp, x, 0.0).q_dot == 0.0);
    CHECK(replicator_field(kSp, x, 1.0).q_dot == 0.0);
  }
}

TEST_CASE("interior equilibrium") {
  const auto eq = interior_equilibrium(kSp);
  REQUIRE(eq);
  CHECK(eq->q == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(eq->p == doctest::Approx(0.125).epsilon(1e-15));
  const auto v = replicator_field(kSp, eq->p, eq->q);
  CHECK(std::abs(v.p_dot) <= 1e-12);
  CHECK(std::abs(v.q_dot) <= 1e-12);

  auto free_defense = kSp;
  free_defense.f = 0.0;
  CHECK_FALSE(interior_equilibrium(free_defense));
  auto attack_dominant = kSp;
  attack_dominant.a = 0.4;
  CHECK_FALSE(interior_equilibrium(attack_dominant));
  auto flat = kSp;
  flat.a = flat.c;
  CHECK_FALSE(interior_equilibrium(flat));

  Rng rng(12);
  int found = 0;
  while (found < 200) {
    const auto t = target(rng.uniform(0, 10), rng.uniform(0, 10), rng.uniform(0.01, 2), rng.uniform(0, 2));
    const auto sp = reduce_payoffs(t, rng.uniform());
    const auto e = interior_equilibrium(sp);
    if (!e) continue;
    ++found;
    CHECK(e->p > 0.0);
    CHECK(e->p < 1.0);
    CHECK(e->q > 0.0);
    CHECK(e->q < 1.0);
    CHECK(replicator_field(sp, e->p, e->q).norm() <= 1e-12);
  }
}

TEST_CASE("trajectory integration") {
  SUBCASE("corner stays put") {
    IntegrationOptions o;
    o.max_steps = 500;
    o.tol = 0.0;
    const auto tr = integrate_trajectory(kSp, 0.0, 0.0, o);
    for (const auto& pt : tr.points) {
      CHECK(pt.p == 0.0);
      CHECK(pt.q == 0.0);
    }
  }
  SUBCASE("corner converges immediately with a positive tolerance") {
    const auto tr = integrate_trajectory(kSp, 1.0, 0.0);
    CHECK(tr.terminated_early);
    CHECK(tr.reason == Termination::Converged);
    CHECK(tr.steps == 0);
  }
  SUBCASE("equilibrium start barely moves") {
    IntegrationOptions o;
    o.dt = 1e-3;
    o.max_steps = 10000;
    o.tol = 0.0;
    const auto tr = integrate_trajectory(kSp, 0.125, 0.625, o);
    CHECK(tr.steps == 10000);
    double drift = 0.0;
    for (const auto& pt : tr.points) drift = std::max(drift, std::hypot(pt.p - 0.125, pt.q - 0.625));
    CHECK(drift < 1e-6);
  }
  SUBCASE("first step follows the field") {
    IntegrationOptions o;
    o.max_steps = 1;
    o.tol = 0.0;
    const auto tr = integrate_trajectory(kSp, 0.5, 0.5, o);
    REQUIRE(tr.points.size() == 2);
    const double dp = tr.points[1].p - 0.5;
    const double dq = tr.points[1].q - 0.5;
    CHECK(dp > 0.0);
    CHECK(dq > 0.0);
    CHECK(dp / 1e-3 == doctest::Approx(0.075).epsilon(1e-3));
    CHECK(dq / 1e-3 == doctest::Approx(0.225).epsilon(1e-3));
    CHECK(tr.points[1].t == doctest::Approx(1e-3));
  }
  SUBCASE("fourth order convergence") {
    const auto ref_big = one_step(0.2, 10);
    const auto ref_small = one_step(0.1, 10);
    const auto big = one_step(0.2, 1);
    const auto small = one_step(0.1, 1);
    const double e_big = std::hypot(big.p - ref_big.p, big.q - ref_big.q);
    const double e_small = std::hypot(small.p - ref_small.p, small.q - ref_small.q);
    REQUIRE(e_small > 0.0);
    CHECK(e_big / e_small >= 12.0);
  }
  SUBCASE("record stride keeps endpoints") {
    IntegrationOptions o;
    o.max_steps = 1005;
    o.tol = 0.0;
    o.record_every = 100;
    const auto tr = integrate_trajectory(kSp, 0.3, 0.3, o);
    REQUIRE(tr.points.size() == 12);
    CHECK(tr.points.front().t == 0.0);
    CHECK(tr.points.back().t == doctest::Approx(1.005));
  }
}

TEST_CASE("phase portrait") {
  IntegrationOptions o;
  o.max_steps = 20000;
  o.record_every = 50;
  const auto two = phase_portrait(kSp, 2, o);
  REQUIRE(two.size() == 4);
  const double third = 1.0 / 3.0;
  CHECK(two[0].points.front().p == doctest::Approx(third));
  CHECK(two[0].points.front().q == doctest::Approx(third));
  CHECK(two[1].points.front().p == doctest::Approx(third));
  CHECK(two[1].points.front().q == doctest::Approx(2 * third));
  CHECK(two[3].points.front().p == doctest::Approx(2 * third));

  const auto grid = phase_portrait(kSp, 4, o, 3);
  const auto serial = phase_portrait(kSp, 4, o, 1);
  REQUIRE(grid.size() == 16);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto& tr = grid[k];
    CHECK((tr.final_field_norm < 10 * o.tol || tr.steps == o.max_steps));
    for (const auto& pt : tr.points) {
      CHECK(pt.p >= 0.0);
      CHECK(pt.p <= 1.0);
      CHECK(pt.q >= 0.0);
      CHECK(pt.q <= 1.0);
    }
    REQUIRE(serial[k].points.size() == tr.points.size());
    CHECK(serial[k].points.back().p == tr.points.back().p);
  }
  CHECK_THROWS(phase_portrait(kSp, 1, o));
}
