#pragma once

#include <cstddef>

namespace pcf {

struct FlowResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::size_t steps = 0;
};

/// Carries a solution of Phi' = Phi^2 - x Phi - (n - 1/2) from x_from down to
/// x_to <= x_from. The leftward flow contracts, so the error stays near rel_tol.
/// The estimate compares runs at rel_tol and 100 rel_tol.
FlowResult riccati_flow_left(double n, double x_from, double phi_from, double x_to,
                             double rel_tol);

}  // namespace pcf
