#include "pcf/nullcline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace pcf {
namespace {

constexpr double kThirdTurn = 2.0 * std::numbers::pi / 3.0;

struct TrigForm {
  double scale;  // f_n(x)
  double angle;  // arccos(x / f_n(x)^3)
};

TrigForm trig_form(double n, double x) noexcept {
  const double inv_f2 = 3.0 / (x * x + 4.0 * n);
  const double arg = std::clamp(x * inv_f2 * std::sqrt(inv_f2), -1.0, 1.0);
  return {1.0 / std::sqrt(inv_f2), std::acos(arg)};
}

}  // namespace

namespace detail {

double lambda_plus_unchecked(double n, double x) noexcept {
  const TrigForm t = trig_form(n, x);
  return t.scale * std::cos(t.angle / 3.0);
}

double w_from_lambda(double n, double x, double lambda) noexcept {
  return n + x / (4.0 * lambda);
}

}  // namespace detail

double scaled_discriminant(const Parameters& p) noexcept {
  const double n = p.n;
  const double x2 = p.x * p.x;
  return ((x2 + 12.0 * n) * x2 + (48.0 * n * n - 27.0)) * x2 + 64.0 * n * n * n;
}

CubicRoots cubic_roots(const Parameters& p) {
  detail::require_order(p, 0.5, "cubic_roots");
  const TrigForm t = trig_form(p.n, p.x);
  std::array<double, 3> r{t.scale * std::cos(t.angle / 3.0),
                          t.scale * std::cos(t.angle / 3.0 + kThirdTurn),
                          t.scale * std::cos(t.angle / 3.0 - kThirdTurn)};
  std::sort(r.begin(), r.end());
  // The middle root is small near x = 0; recover it from the product of roots.
  const double middle = p.x / (4.0 * r[0] * r[2]);
  return {r[0], middle, r[2]};
}

double lambda_plus(const Parameters& p) {
  detail::require_order(p, 0.5, "lambda_plus");
  return detail::lambda_plus_unchecked(p.n, p.x);
}

double nullcline_w(const Parameters& p) {
  detail::require_order(p, 0.5, "nullcline_w");
  return detail::w_from_lambda(p.n, p.x, detail::lambda_plus_unchecked(p.n, p.x));
}

double lambda_plus_derivative(const Parameters& p) {
  detail::require_order(p, 0.5, "lambda_plus_derivative");
  const double lam = detail::lambda_plus_unchecked(p.n, p.x);
  return (1.0 + 2.0 * p.x * lam) / (4.0 * (3.0 * lam * lam - potential(p)));
}

double w_derivative(const Parameters& p) {
  detail::require_order(p, 0.5, "w_derivative");
  const double lam = detail::lambda_plus_unchecked(p.n, p.x);
  const double w = detail::w_from_lambda(p.n, p.x, lam);
  return 0.5 * w / (lam * (3.0 * lam * lam - potential(p)));
}

double cubic_residual(const Parameters& p, double lambda) noexcept {
  return (lambda * lambda - potential(p)) * lambda - 0.25 * p.x;
}

}  // namespace pcf
