#include "pcf/riccati.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/numeric/odeint/integrate/integrate_adaptive.hpp>
#include <boost/numeric/odeint/stepper/generation.hpp>
#include <boost/numeric/odeint/stepper/runge_kutta_fehlberg78.hpp>

#include "pcf/parameters.hpp"

namespace pcf {
namespace {

namespace odeint = boost::numeric::odeint;

constexpr double kInitialStep = -1.0 / 64.0;
constexpr double kLooseFactor = 100.0;

struct Run {
  double value;
  std::size_t steps;
};

Run integrate(double n, double x_from, double phi_from, double x_to, double rel_tol) {
  const auto rhs = [n](const double& y, double& dy, double x) { dy = y * (y - x) - (n - 0.5); };
  double y = phi_from;
  const std::size_t steps = odeint::integrate_adaptive(
      odeint::make_controlled<odeint::runge_kutta_fehlberg78<double>>(0.0, rel_tol), rhs, y,
      x_from, x_to, kInitialStep);
  return {y, steps};
}

}  // namespace

FlowResult riccati_flow_left(double n, double x_from, double phi_from, double x_to,
                             double rel_tol) {
  if (!(x_to <= x_from)) throw ArgumentError("riccati_flow_left: requires x_to <= x_from");
  if (x_to == x_from) return {phi_from, 0.0, 0};
  const Run fine = integrate(n, x_from, phi_from, x_to, rel_tol);
  const Run coarse = integrate(n, x_from, phi_from, x_to, kLooseFactor * rel_tol);
  const double floor =
      std::max(rel_tol, 4.0 * std::numeric_limits<double>::epsilon()) * std::abs(fine.value);
  return {fine.value, std::max(std::abs(fine.value - coarse.value), floor),
          fine.steps + coarse.steps};
}

}  // namespace pcf
