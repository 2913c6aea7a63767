#include "gtra/stats.hpp"

#include <algorithm>
#include <cmath>

namespace gtra {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double standard_error(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const double n = static_cast<double>(xs.size());
  return std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
}

SignTest sign_test(std::span<const double> differences) {
  SignTest r;
  for (double d : differences) {
    if (d > 0.0) {
      ++r.positives;
    } else if (d < 0.0) {
      ++r.negatives;
    } else {
      ++r.ties;
    }
  }
  const std::size_t n = r.positives + r.negatives;
  if (n == 0) return r;
  // Upper binomial tail in log space; n stays small enough for lgamma.
  double tail = 0.0;
  const double log_half_n = static_cast<double>(n) * std::log(0.5);
  for (std::size_t k = r.positives; k <= n; ++k) {
    const double log_choose = std::lgamma(static_cast<double>(n) + 1.0) -
                              std::lgamma(static_cast<double>(k) + 1.0) -
                              std::lgamma(static_cast<double>(n - k) + 1.0);
    tail += std::exp(log_choose + log_half_n);
  }
  r.p_value = std::min(1.0, tail);
  return r;
}

}  // namespace gtra
