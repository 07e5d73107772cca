#include "pcf/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace pcf {
namespace {
constexpr unsigned kMaxBisections = 20;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol) {
  if (a == b) return {};
  QuadratureResult result;
  result.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, kMaxBisections, rel_tol, &result.error);
  return result;
}

}  // namespace pcf
