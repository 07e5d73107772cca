#include "pcf/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "pcf/parameters.hpp"

namespace pcf {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;
constexpr double kGammaOverflow = 171.62;

// Bernoulli numbers B_2k / (2k (2k - 1)).
constexpr std::array<double, 8> kStirling{
    1.0 / 12.0,    -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,  -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};

// 2 B_{k+1}(1/4) / (k (k+1)) for k = 2, 4, ..., 16.
constexpr std::array<double, 8> kQuarterRatio{
    1.0 / 64.0,
    -5.0 / 2048.0,
    61.0 / 49152.0,
    -1385.0 / 1048576.0,
    50521.0 / 20971520.0,
    -2702765.0 / 402653184.0,
    199360981.0 / 7516192768.0,
    -19391512145.0 / 137438953472.0};

constexpr double kRatioSeriesMin = 10.0;
constexpr double kStirlingMin = 15.0;
constexpr double kProductMin = 16.0;

double lanczos_sum(double zm1) noexcept {
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (zm1 + static_cast<double>(i));
  }
  return sum;
}

void require_positive(double z, const char* where) {
  if (!(z > 0.0) || std::isnan(z)) {
    throw DomainError(std::string(where) + ": requires z > 0 (got z = " + format_real(z) + ")");
  }
}

double gamma_positive(double z) noexcept {
  if (z < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * z) * gamma_positive(1.0 - z));
  }
  if (z > kGammaOverflow) return std::numeric_limits<double>::infinity();
  if (z > kProductMin) {
    // Gamma(z) = Gamma(z - m) (z - 1)(z - 2)...(z - m), with z - m just below kProductMin.
    double product = 1.0;
    double y = z;
    while (y > kProductMin) {
      y -= 1.0;
      product *= y;
    }
    return gamma_positive(y) * product;
  }
  const double zm1 = z - 1.0;
  const double t = zm1 + kLanczosG + 0.5;
  // t^(z-1/2) split in two halves so the power stays finite up to the overflow edge.
  const double half_power = std::pow(t, 0.5 * (zm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * (half_power * std::exp(-t)) * half_power *
         lanczos_sum(zm1);
}

}  // namespace

double gamma_fn(double z) {
  require_positive(z, "gamma_fn");
  return gamma_positive(z);
}

double log_gamma(double z) {
  require_positive(z, "log_gamma");
  if (z < kStirlingMin) return std::log(gamma_positive(z));
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
    series = series * inv2 + *it;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLogTwoPi + series * inv;
}

double log_quarter_ratio_excess(double z) {
  require_positive(z, "log_quarter_ratio_excess");
  if (z < kRatioSeriesMin) {
    return std::log(gamma_positive(z + 0.75) / (gamma_positive(z + 0.25) * std::sqrt(z)));
  }
  const double inv2 = 1.0 / (z * z);
  double series = 0.0;
  for (auto it = kQuarterRatio.rbegin(); it != kQuarterRatio.rend(); ++it) {
    series = series * inv2 + *it;
  }
  return series * inv2;
}

}  // namespace pcf
