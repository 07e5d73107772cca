#include "pcf/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pcf/bounds.hpp"
#include "pcf/gamma.hpp"
#include "pcf/nullcline.hpp"
#include "pcf/quadrature.hpp"
#include "pcf/riccati.hpp"

namespace pcf {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kAnchor = 2.0;
constexpr int kInitialDepth = 8;
constexpr double kRatioSeriesOrder = 20.0;  // n beyond which phi_at_zero uses the log series

void require_tolerance(double rel_tol, const char* where) {
  if (!(rel_tol >= 10.0 * kEps) || !std::isfinite(rel_tol)) {
    throw ArgumentError(std::string(where) + ": rel_tol must be at least 10 machine epsilons");
  }
}

double flow_tolerance(double rel_tol) { return std::clamp(1e-3 * rel_tol, 1e-15, 1e-8); }

Enclosure clip(Enclosure e, const PhiEnclosure& closed, double rel_tol) {
  e.lo = std::max(e.lo, closed.lo);
  e.hi = std::min(e.hi, closed.hi);
  e.converged = e.hi - e.lo <= rel_tol * e.lo;
  return e;
}

// Bracket from the two seeded sweeps. Each level rounds by about 2 eps and damps
// earlier errors by (t - x)/t, so the accumulated rounding stays below
// 2 eps t/x with t an upper bound of Phi_n(x).
Enclosure continued_fraction(const Parameters& p, double rel_tol, int max_depth) {
  const double slack = 4.0 * kEps * (1.0 + detail::phi_bar_unchecked(p.n, p.x) / p.x);
  int depth = std::min(kInitialDepth, max_depth);
  for (;;) {
    const double tail_n = p.n + depth;
    const double a = backward_sweep(p, depth, detail::phi_trig_unchecked(tail_n, p.x));
    const double b = backward_sweep(p, depth, detail::phi_bar_unchecked(tail_n, p.x));
    Enclosure e{std::min(a, b) * (1.0 - slack), std::max(a, b) * (1.0 + slack), depth, false};
    e.converged = e.hi - e.lo <= rel_tol * e.lo;
    if (e.converged || depth >= max_depth) return e;
    depth = std::min(2 * depth, max_depth);
  }
}

double series_sum(double c0, double c1, double c2, double t, double& last) {
  last = std::abs(c2 * t * t);
  return c0 + c1 * t + c2 * t * t;
}

void require_series_argument(const Parameters& p, const char* where) {
  detail::require_order(p, 0.5, where);
  if (std::abs(p.x) < 1.0) {
    throw ArgumentError(std::string(where) + ": requires |x| >= 1 (got x = " +
                        format_real(p.x) + ")");
  }
}

void require_limits(double y, double z, const char* where) {
  if (!std::isfinite(y) || !std::isfinite(z)) {
    throw DomainError(std::string(where) + ": limits must be finite");
  }
  if (z < y) throw ArgumentError(std::string(where) + ": requires z >= y");
}

}  // namespace

double backward_sweep(const Parameters& p, int depth, double tail) {
  double t = tail;
  for (int k = depth - 1; k >= 0; --k) {
    t = p.x + (p.n + k + 0.5) / t;
  }
  return t;
}

Enclosure cf_enclosure(const Parameters& p, double rel_tol, int max_depth) {
  detail::require_order(p, 0.5, "cf_enclosure");
  require_tolerance(rel_tol, "cf_enclosure");
  if (max_depth < 0) throw ArgumentError("cf_enclosure: max_depth must be non-negative");

  if (max_depth == 0) {
    const double lo = detail::phi_trig_unchecked(p.n, p.x);
    const double hi = detail::phi_bar_unchecked(p.n, p.x);
    return {lo, hi, 0, hi - lo <= rel_tol * lo};
  }

  const PhiEnclosure closed = enclose_phi(p);
  if (p.x >= kAnchor) return clip(continued_fraction(p, rel_tol, max_depth), closed, rel_tol);

  const Enclosure anchor = continued_fraction({p.n, kAnchor}, rel_tol, max_depth);
  const double tol = flow_tolerance(rel_tol);
  const FlowResult lo = riccati_flow_left(p.n, kAnchor, anchor.lo, p.x, tol);
  const FlowResult hi = riccati_flow_left(p.n, kAnchor, anchor.hi, p.x, tol);
  Enclosure e{std::min(lo.value, hi.value) - lo.error_estimate,
              std::max(lo.value, hi.value) + hi.error_estimate, anchor.depth_used, false};
  return clip(e, closed, rel_tol);
}

Enclosure w_enclosure(const Parameters& p, double rel_tol) {
  const Enclosure a = cf_enclosure(p, rel_tol);
  const Enclosure b = cf_enclosure({p.n + 1.0, p.x}, rel_tol);
  const double c = p.n + 0.5;
  const Enclosure w{c * a.lo / b.hi * (1.0 - 2.0 * kEps), c * a.hi / b.lo * (1.0 + 2.0 * kEps),
              std::max(a.depth_used, b.depth_used), a.converged && b.converged};
  return w;
}

double phi_at_zero(double n) {
  detail::require_order(n, 0.5, "phi_at_zero");
  if (n < kRatioSeriesOrder) {
    const double z = 0.5 * n;
    return std::numbers::sqrt2 * gamma_fn(z + 0.75) / gamma_fn(z + 0.25);
  }
  return std::sqrt(n) * std::exp(log_quarter_ratio_excess(0.5 * n));
}

double phi_at_zero_log_excess(double n) {
  detail::require_order(n, 0.5, "phi_at_zero_log_excess");
  return log_quarter_ratio_excess(0.5 * n);
}

AsymptoticSeries asym_phi(const Parameters& p, Direction direction) {
  require_series_argument(p, "asym_phi");
  const double n = p.n;
  const double t = 1.0 / (p.x * p.x);
  AsymptoticSeries s{direction, 3, 0.0, 0.0};
  double last = 0.0;
  if (direction == Direction::x_plus) {
    s.value = p.x * series_sum(1.0, n + 0.5, -(n + 0.5) * (n + 1.5), t, last);
    s.next_term_estimate = std::abs(p.x) * last;
  } else {
    const double scale = -(n - 0.5) / p.x;
    s.value = scale * series_sum(1.0, -(n - 1.5), 2.0 * (n - 1.5) * (n - 2.0), t, last);
    s.next_term_estimate = std::abs(scale) * last;
  }
  return s;
}

AsymptoticSeries asym_w(const Parameters& p, Direction direction) {
  require_series_argument(p, "asym_w");
  const double n = p.n;
  const double t = 1.0 / (p.x * p.x);
  const double sign = direction == Direction::x_plus ? 1.0 : -1.0;
  const double scale = n + 0.5 * sign;
  double last = 0.0;
  const double sum = series_sum(1.0, -sign, 4.5 + 3.0 * n * sign, t, last);
  return {direction, 3, scale * sum, std::abs(scale) * last};
}

RatioBounds u_ratio_bounds(double n, double y, double z, double rel_tol) {
  detail::require_order(n, 0.5, "u_ratio_bounds");
  require_limits(y, z, "u_ratio_bounds");
  if (!(rel_tol > 0.0)) throw ArgumentError("u_ratio_bounds: rel_tol must be positive");
  if (z == y) return {};

  const bool has_tilde = is_valid(BoundKind::phi_upper_forward_sharp, n);
  const auto lower_rate = [n](double x) { return detail::lambda_plus_unchecked(n, x); };
  const auto upper_rate = [n, has_tilde](double x) {
    double t = detail::phi_bar_unchecked(n, x);
    if (has_tilde) t = std::min(t, detail::phi_tilde_unchecked(n, x));
    return t - 0.5 * x;
  };
  const QuadratureResult q_lo = integrate_adaptive(lower_rate, y, z, 0.1 * rel_tol);
  const QuadratureResult q_hi = integrate_adaptive(upper_rate, y, z, 0.1 * rel_tol);

  RatioBounds r;
  r.hi = std::exp(-(q_lo.value - q_lo.error));
  r.lo = std::exp(-(q_hi.value + q_hi.error));
  r.quadrature_error = std::max(q_lo.error, q_hi.error);
  r.converged = q_lo.error <= rel_tol * std::abs(q_lo.value) &&
                q_hi.error <= rel_tol * std::abs(q_hi.value);
  return r;
}

double frozen_antiderivative(double x, double c) {
  return 0.25 * x * std::sqrt(x * x + 4.0 * c) + c * std::log(detail::shifted_root(x, 4.0 * c));
}

double frozen_integral_bound(double n, double y, double z, bool use_algebraic) {
  detail::require_order(n, 0.5, "frozen_integral_bound");
  require_limits(y, z, "frozen_integral_bound");
  if (z == y) return 1.0;
  const Parameters at_y{n, y};
  const double c = use_algebraic ? w_lower_algebraic(at_y) : nullcline_w(at_y);
  return std::exp(-(frozen_antiderivative(z, c) - frozen_antiderivative(y, c)));
}

}  // namespace pcf
