#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace pcf::test {

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Symmetric grid -limit..limit with the given step.
inline std::vector<double> symmetric_grid(double limit, double step) {
  std::vector<double> xs;
  const int half = static_cast<int>(std::lround(limit / step));
  for (int i = -half; i <= half; ++i) xs.push_back(i * step);
  return xs;
}

/// Random (n, x) pairs with n spread over decades above n_min.
class ParameterSource {
 public:
  explicit ParameterSource(double n_min, double x_limit = 50.0, unsigned seed = 20240611)
      : rng_(seed), n_min_(n_min), x_(-x_limit, x_limit), log_gap_(-6.0, 5.0) {}

  double order() { return n_min_ + std::exp(log_gap_(rng_)); }
  double argument() { return x_(rng_); }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

 private:
  std::mt19937_64 rng_;
  double n_min_;
  std::uniform_real_distribution<double> x_;
  std::uniform_real_distribution<double> log_gap_;
};

}  // namespace pcf::test
