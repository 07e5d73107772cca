#pragma once

#include "pcf/parameters.hpp"

namespace pcf {

inline constexpr double kDefaultRelTol = 1e-12;
inline constexpr int kDefaultMaxDepth = 4096;

/// Certified interval containing a true ratio value.
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;
  int depth_used = 0;
  bool converged = false;

  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  double relative_width() const noexcept { return (hi - lo) / lo; }
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

/// Enclosure of Phi_n(x) from the backward recurrence seeded at depth N with
/// phi_{n+N} and phibar_{n+N}; N doubles from 8 up to max_depth. Left of
/// x = 2 both edges of the enclosure at x = 2 are carried by the Riccati flow.
/// max_depth = 0 returns the seeds [phi_n, phibar_n].
Enclosure cf_enclosure(const Parameters& p, double rel_tol = kDefaultRelTol,
                       int max_depth = kDefaultMaxDepth);

/// Phi_n(x) obtained by running Phi_k = x + (k + 1/2)/Phi_{k+1} down from
/// Phi_{n+depth} = tail to k = n.
double backward_sweep(const Parameters& p, int depth, double tail);

/// Enclosure of W_n(x) = (n + 1/2) Phi_n / Phi_{n+1}.
Enclosure w_enclosure(const Parameters& p, double rel_tol = kDefaultRelTol);

/// Phi_n(0) = sqrt(2) Gamma(n/2 + 3/4) / Gamma(n/2 + 1/4).
double phi_at_zero(double n);

/// ln(Phi_n(0) / sqrt(n)), accurate for large n where the ratio is 1 + 1/(16 n^2).
double phi_at_zero_log_excess(double n);

enum class Direction { x_plus, x_minus };

struct AsymptoticSeries {
  Direction direction = Direction::x_plus;
  int terms_used = 0;
  double value = 0.0;
  double next_term_estimate = 0.0;  // magnitude of the last included term
};

/// Three-term large-|x| expansion of Phi_n(x). Requires |x| >= 1; the
/// direction is not checked against the sign of x.
AsymptoticSeries asym_phi(const Parameters& p, Direction direction);

/// Three-term large-|x| expansion of W_n(x).
AsymptoticSeries asym_w(const Parameters& p, Direction direction);

struct RatioBounds {
  double lo = 1.0;
  double hi = 1.0;
  double quadrature_error = 0.0;  // larger of the two integral error estimates
  bool converged = true;
};

/// Two-sided bounds of U(n,z)/U(n,y) for z >= y: hi from the integral of
/// lambda_n^+, lo from the integral of min(phibar, phitilde) - x/2.
RatioBounds u_ratio_bounds(double n, double y, double z, double rel_tol = 1e-10);

/// Elementary upper bound of U(n,z)/U(n,y) with w frozen at y.
double frozen_integral_bound(double n, double y, double z, bool use_algebraic);

/// (x/4) sqrt(x^2 + 4c) + c ln(x + sqrt(x^2 + 4c)), an antiderivative of sqrt(x^2/4 + c).
double frozen_antiderivative(double x, double c);

}  // namespace pcf
