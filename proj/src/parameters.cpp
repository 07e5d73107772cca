#include "pcf/parameters.hpp"

#include <cmath>
#include <cstdio>

namespace pcf {

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

namespace detail {

void require_order(double n, double min_n, const char* where) {
  if (!std::isfinite(n)) {
    throw DomainError(std::string(where) + ": order must be finite");
  }
  if (!(n > min_n)) {
    throw DomainError(std::string(where) + ": requires n > " + format_real(min_n) +
                      " (got n = " + format_real(n) + ")");
  }
}

void require_order(const Parameters& p, double min_n, const char* where) {
  if (!std::isfinite(p.x)) {
    throw DomainError(std::string(where) + ": argument must be finite");
  }
  require_order(p.n, min_n, where);
}

}  // namespace detail
}  // namespace pcf
