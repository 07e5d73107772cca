#pragma once

#include <functional>

namespace pcf {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

/// Adaptive Gauss-Kronrod (7/15) integral of f over [a, b], a <= b.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol);

}  // namespace pcf
