#pragma once

#include <cstddef>
#include <span>

namespace gtra {

double mean(std::span<const double> xs);

// Sample standard deviation divided by sqrt(n); 0 for fewer than two values.
double standard_error(std::span<const double> xs);

struct SignTest {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t ties = 0;
  double p_value = 1.0;  // one-sided: P(X >= positives | Bin(n, 1/2))
};

// One-sided exact sign test of "differences tend to be positive". Exact
// zeros are dropped.
SignTest sign_test(std::span<const double> differences);

}  // namespace gtra
