#pragma once

#include "pcf/parameters.hpp"

namespace pcf {

/// Real roots of the nullcline cubic lambda^3 - V_n(x) lambda - x/4 = 0, ascending.
struct CubicRoots {
  double lambda_minus = 0.0;
  double lambda_zero = 0.0;
  double lambda_plus = 0.0;
};

/// 16 times the discriminant of the nullcline cubic:
/// x^6 + 12 x^4 n + (48 n^2 - 27) x^2 + 64 n^3.
double scaled_discriminant(const Parameters& p) noexcept;

/// All three roots from the trigonometric formula. Requires n > 1/2.
CubicRoots cubic_roots(const Parameters& p);

/// The positive root lambda_n^+(x). Requires n > 1/2.
double lambda_plus(const Parameters& p);

/// w_n(x) = lambda_n^+(x)^2 - x^2/4, the trigonometric lower bound of W_n.
double nullcline_w(const Parameters& p);

/// d lambda_n^+ / dx. Tends to -1/2 as x -> -inf and +1/2 as x -> +inf.
double lambda_plus_derivative(const Parameters& p);

/// d w_n / dx, always positive.
double w_derivative(const Parameters& p);

/// lambda^3 - V_n(x) lambda - x/4.
double cubic_residual(const Parameters& p, double lambda) noexcept;

namespace detail {

// Unchecked kernels shared with the bound formulas; callers validate n.
double lambda_plus_unchecked(double n, double x) noexcept;

/// lambda^2 - x^2/4 evaluated as n + x/(4 lambda), free of cancellation.
double w_from_lambda(double n, double x, double lambda) noexcept;

}  // namespace detail
}  // namespace pcf
