#pragma once

#include <span>
#include <string>
#include <vector>

#include "pcf/bounds.hpp"
#include "pcf/reference.hpp"

namespace pcf {

/// Leading relative error coefficient * |x|^-order of a bound in one direction.
/// Order 0 marks a direction in which the bound is not asymptotically exact.
/// printed is false for order-only claims, where coefficient is 1.
struct RateModel {
  double coefficient = 1.0;
  int order = 0;
  bool printed = false;
};

RateModel predicted_rate(BoundKind kind, double n, Direction direction);

struct SharpnessRecord {
  double n = 0.0;
  double x = 0.0;
  BoundKind bound_kind = BoundKind::phi_lower_trig;
  double raw_error = 0.0;     // relative excess of the true value over the bound, or vice versa
  double scaled_error = 0.0;  // raw_error * |x|^order / coefficient
};

/// Relative error of a bound along xs against enclosure midpoints (rel_tol 1e-12).
std::vector<SharpnessRecord> sharpness_scan(BoundKind kind, double n, std::span<const double> xs);

/// Errors at x = 0 of the Riccati, trigonometric and algebraic lower bounds,
/// scaled by 4n, 16n^2 and 8n^2.
std::vector<SharpnessRecord> zero_order_scan(std::span<const double> ns);

/// Location of the largest raw error in a scan.
struct ErrorPeak {
  double x = 0.0;
  double raw_error = 0.0;
};

ErrorPeak error_peak(std::span<const SharpnessRecord> records);

struct MonotonicityViolation {
  std::string quantity;  // "phi" or "w"
  double x_left = 0.0;
  double x_right = 0.0;
};

struct MonotonicityReport {
  double n = 0.0;
  std::size_t points = 0;
  std::vector<MonotonicityViolation> violations;
};

/// Checks that enclosures of Phi_n and W_n at consecutive sorted xs are
/// consistent with both being increasing and Phi_n positive.
MonotonicityReport monotonicity_scan(double n, std::span<const double> xs);

struct ContourPoint {
  double x = 0.0;
  double n = 0.0;
  double residual = 0.0;  // phitilde/phi - 1 - epsilon at (n, x)
};

struct ContourCurve {
  double epsilon = 0.0;
  std::vector<ContourPoint> points;
  std::vector<double> uncovered_x;  // x where the error is already below epsilon at n = 3/2+
};

/// phitilde_n(x) / phi_n(x) - 1 for n > 3/2.
double contour_error(double n, double x);

/// Curve phitilde/phi - 1 = epsilon solved for n at evenly spaced x.
ContourCurve contour(double epsilon, double x_min, double x_max, int points);

/// count evenly spaced values from first to last inclusive.
std::vector<double> linspace(double first, double last, int count);

}  // namespace pcf
