#pragma once

namespace pcf {

/// Gamma(z) for z > 0 (Lanczos, g = 7). Returns +inf once Gamma(z) exceeds
/// the double range (z > 171.62).
double gamma_fn(double z);

/// ln Gamma(z) for z > 0; finite for every finite z.
double log_gamma(double z);

/// ln Gamma(z + 3/4) - ln Gamma(z + 1/4) - (1/2) ln z for z > 0.
double log_quarter_ratio_excess(double z);

}  // namespace pcf
