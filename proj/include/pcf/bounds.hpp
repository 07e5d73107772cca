#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "pcf/parameters.hpp"

namespace pcf {

enum class BoundKind {
  phi_lower_riccati,
  phi_upper_backward_simple,
  phi_upper_forward_simple,
  phi_lower_trig,
  phi_lower_algebraic,
  phi_upper_backward_sharp,
  phi_upper_forward_sharp,
  w_lower_trig,
  w_lower_algebraic,
  w_upper_from_phi,
  w_chain_pri1_lower,
  w_chain_pri1_upper,
};

enum class BoundTarget { phi, w };
enum class BoundSide { lower, upper };

struct BoundInfo {
  BoundKind kind;
  std::string_view tag;
  double min_n;  // strict threshold: valid iff n > min_n
  BoundTarget target;
  BoundSide side;
  std::string_view basis;
};

inline constexpr std::size_t kBoundKindCount = 12;

const std::array<BoundInfo, kBoundKindCount>& all_bounds() noexcept;
const BoundInfo& bound_info(BoundKind kind) noexcept;
std::string_view to_string(BoundKind kind) noexcept;
std::optional<BoundKind> parse_bound_kind(std::string_view tag) noexcept;
bool is_valid(BoundKind kind, double n) noexcept;

/// Value of any bound by tag; throws DomainError outside its validity window.
double evaluate_bound(BoundKind kind, const Parameters& p);

/// (n - beta) (x + sqrt(4(n-alpha) + x^2)) / (x + sqrt(4(n-beta) + x^2)).
double h_alpha_beta(const Parameters& p, double alpha, double beta);

double phi_lower_riccati(const Parameters& p);
double phi_upper_backward_simple(const Parameters& p);
double phi_upper_forward_simple(const Parameters& p);
double phi_lower_trig(const Parameters& p);
double phi_lower_algebraic(const Parameters& p);
double phi_upper_backward_sharp(const Parameters& p);
double phi_upper_forward_sharp(const Parameters& p);

double w_lower_trig(const Parameters& p);
double w_lower_algebraic(const Parameters& p);
double w_upper_from_phi(const Parameters& p);

/// lower < n - 1/2 < W_n < n + 1/2 and W_n < upper; upper exists only for n > 3/2.
struct WChain {
  double lower = 0.0;
  double mid_lower = 0.0;
  double mid_upper = 0.0;
  std::optional<double> upper;
};

WChain w_chain_pri1(const Parameters& p);

/// Sharpest valid closed-form bracket of Phi_n(x).
struct PhiEnclosure {
  double lo = 0.0;
  double hi = 0.0;
  BoundKind lo_kind = BoundKind::phi_lower_trig;
  BoundKind hi_kind = BoundKind::phi_upper_backward_sharp;
};

PhiEnclosure enclose_phi(const Parameters& p);

namespace detail {

/// x + sqrt(x^2 + c) for c >= 0, without cancellation for negative x.
double shifted_root(double x, double c) noexcept;

// Unchecked kernels; callers validate n.
double phi_trig_unchecked(double n, double x) noexcept;
double phi_bar_unchecked(double n, double x) noexcept;
double phi_tilde_unchecked(double n, double x) noexcept;

}  // namespace detail
}  // namespace pcf
