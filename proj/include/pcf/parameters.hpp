#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

/// Order n and argument x of the ratio U(n-1,x)/U(n,x).
struct Parameters {
  double n = 0.0;
  double x = 0.0;
};

/// Shifted potential V_n(x) = x^2/4 + n.
inline double potential(const Parameters& p) noexcept { return 0.25 * p.x * p.x + p.n; }

/// An order or argument outside the validity domain. Thresholds are strict.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A malformed request: reversed limits, bad tolerance, series too close to 0.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No sign change was found while bracketing a root.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal form that round-trips ("%.17g").
std::string format_real(double value);

namespace detail {

/// Throws DomainError unless n and x are finite and n > min_n.
void require_order(const Parameters& p, double min_n, const char* where);
void require_order(double n, double min_n, const char* where);

}  // namespace detail
}  // namespace pcf
