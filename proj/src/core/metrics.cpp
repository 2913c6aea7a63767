#include "gtra/metrics.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "gtra/errors.hpp"
#include "gtra/parallel.hpp"
#include "gtra/rng.hpp"

namespace gtra {

OutcomeCounts& OutcomeCounts::operator+=(const OutcomeCounts& o) {
  ap += o.ap;
  af += o.af;
  np += o.np;
  nf += o.nf;
  trials += o.trials;
  return *this;
}

namespace {

void check_lengths(const GameInstance& g, const AttackStrategy& p,
                   const DefenseStrategy& q) {
  if (p.p.size() != g.size() || q.q.size() != g.size()) {
    throw DimensionError("strategy lengths " + std::to_string(p.p.size()) +
                         "/" + std::to_string(q.q.size()) +
                         " do not match " + std::to_string(g.size()) +
                         " targets");
  }
}

template <typename Counts>
double vulnerability_of(const Counts& c) {
  const double success = static_cast<double>(c.af);
  const double failure = static_cast<double>(c.ap);
  if (success + failure == 0.0) return -1.0;
  return (success - failure) / (success + failure);
}

template <typename Counts>
double covered_per_trial(const Counts& c) {
  return static_cast<double>(c.ap + c.np + c.nf) / static_cast<double>(c.trials);
}

template <typename Counts>
double coverage_of(const Counts& c) {
  return covered_per_trial(c) / static_cast<double>(c.n);
}

template <typename Counts>
double effectiveness_of(const Counts& c, double resources) {
  const double covered = covered_per_trial(c);
  if (resources == 0.0) {
    return covered == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return covered / resources;
}

}  // namespace

OutcomeCounts sample_outcomes(const GameInstance& g, const AttackStrategy& p,
                              const DefenseStrategy& q, std::uint64_t trials,
                              std::uint64_t stream_seed, unsigned threads) {
  check_lengths(g, p, q);
  if (trials == 0) throw ConfigError("trials must be positive");
  const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  std::vector<OutcomeCounts> partial(blocks);
  const std::size_t n = g.size();
  parallel_for(blocks, threads, [&](std::size_t b) {
    Rng rng(derive_seed(stream_seed, b));
    const std::uint64_t first = b * kTrialsPerBlock;
    const std::uint64_t count = std::min(kTrialsPerBlock, trials - first);
    OutcomeCounts c;
    c.trials = count;
    for (std::uint64_t t = 0; t < count; ++t) {
      for (std::size_t i = 0; i < n; ++i) {
        const bool attacked = rng.uniform() < p.p[i];
        const bool protected_ = rng.uniform() < q.q[i];
        if (attacked) {
          ++(protected_ ? c.ap : c.af);
        } else {
          ++(protected_ ? c.np : c.nf);
        }
      }
    }
    partial[b] = c;
  });
  OutcomeCounts total;
  for (const auto& c : partial) total += c;
  total.n = n;
  return total;
}

ExpectedOutcomes expected_outcomes(const GameInstance& g,
                                   const AttackStrategy& p,
                                   const DefenseStrategy& q) {
  check_lengths(g, p, q);
  ExpectedOutcomes e;
  e.n = static_cast<double>(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double a = p.p[i];
    const double d = q.q[i];
    e.ap += a * d;
    e.af += a * (1.0 - d);
    e.np += (1.0 - a) * d;
    e.nf += (1.0 - a) * (1.0 - d);
  }
  return e;
}

double vulnerability(const OutcomeCounts& c) { return vulnerability_of(c); }
double vulnerability(const ExpectedOutcomes& c) { return vulnerability_of(c); }
double coverage(const OutcomeCounts& c) { return coverage_of(c); }
double coverage(const ExpectedOutcomes& c) { return coverage_of(c); }

double consumed_resources(const GameInstance& g, const DefenseStrategy& q) {
  return resource_consumption(g, q.q);
}

double effectiveness(const OutcomeCounts& c, double resources) {
  return effectiveness_of(c, resources);
}

double effectiveness(const ExpectedOutcomes& c, double resources) {
  return effectiveness_of(c, resources);
}

double growth_rate(double a, double b) {
  if (b == 0.0) throw DivisionError("growth rate undefined for b = 0");
  return (a - b) / b;
}

}  // namespace gtra
