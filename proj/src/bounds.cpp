#include "pcf/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "pcf/nullcline.hpp"

namespace pcf {
namespace {

using K = BoundKind;
constexpr BoundTarget kPhi = BoundTarget::phi;
constexpr BoundTarget kW = BoundTarget::w;
constexpr BoundSide kLower = BoundSide::lower;
constexpr BoundSide kUpper = BoundSide::upper;

constexpr std::array<BoundInfo, kBoundKindCount> kBounds{{
    {K::phi_lower_riccati, "phi_lower_riccati", 0.5, kPhi, kLower, "riccati-nullcline"},
    {K::phi_upper_backward_simple, "phi_upper_backward_simple", -0.5, kPhi, kUpper,
     "backward-recurrence"},
    {K::phi_upper_forward_simple, "phi_upper_forward_simple", 1.5, kPhi, kUpper,
     "forward-recurrence"},
    {K::phi_lower_trig, "phi_lower_trig", 0.5, kPhi, kLower, "trigonometric-nullcline"},
    {K::phi_lower_algebraic, "phi_lower_algebraic", 0.5, kPhi, kLower, "best-algebraic"},
    {K::phi_upper_backward_sharp, "phi_upper_backward_sharp", -0.5, kPhi, kUpper,
     "backward-recurrence-sharp"},
    {K::phi_upper_forward_sharp, "phi_upper_forward_sharp", 1.5, kPhi, kUpper,
     "forward-recurrence-sharp"},
    {K::w_lower_trig, "w_lower_trig", 0.5, kW, kLower, "trigonometric-nullcline"},
    {K::w_lower_algebraic, "w_lower_algebraic", 0.5, kW, kLower, "best-algebraic"},
    {K::w_upper_from_phi, "w_upper_from_phi", 1.5, kW, kUpper, "double-ratio-identity"},
    {K::w_chain_pri1_lower, "w_chain_pri1_lower", 0.5, kW, kLower, "recurrence-chain"},
    {K::w_chain_pri1_upper, "w_chain_pri1_upper", 1.5, kW, kUpper, "recurrence-chain"},
}};

void require(const Parameters& p, BoundKind kind) {
  const BoundInfo& info = bound_info(kind);
  detail::require_order(p, info.min_n, info.tag.data());
}

double h_unchecked(double n, double x, double alpha, double beta) noexcept {
  return (n - beta) * detail::shifted_root(x, 4.0 * (n - alpha)) /
         detail::shifted_root(x, 4.0 * (n - beta));
}

double w_algebraic_unchecked(double n, double x) noexcept {
  return h_unchecked(n, x, 0.5, -0.5);
}

// W bound from phibar: phibar (phibar - x) with phibar - x = (n+1/2)/phi_{n+1}.
double w_bar_unchecked(double n, double x) noexcept {
  const double tail = (n + 0.5) / detail::phi_trig_unchecked(n + 1.0, x);
  return (x + tail) * tail;
}

double w_tilde_unchecked(double n, double x) noexcept {
  const double t = detail::phi_tilde_unchecked(n, x);
  return t * (t - x);
}

}  // namespace

namespace detail {

double shifted_root(double x, double c) noexcept {
  const double r = std::hypot(x, std::sqrt(c));
  return x >= 0.0 ? x + r : c / (r - x);
}

double phi_trig_unchecked(double n, double x) noexcept {
  const double lam = lambda_plus_unchecked(n, x);
  if (x >= 0.0) return 0.5 * x + lam;
  return w_from_lambda(n, x, lam) / (lam - 0.5 * x);
}

double phi_bar_unchecked(double n, double x) noexcept {
  return x + (n + 0.5) / phi_trig_unchecked(n + 1.0, x);
}

double phi_tilde_unchecked(double n, double x) noexcept {
  const double m = n - 1.0;
  const double lam = lambda_plus_unchecked(m, x);
  // -x + phi_{n-1}(x) = lambda - x/2 = w / (lambda + x/2)
  const double denom = x <= 0.0 ? lam - 0.5 * x : w_from_lambda(m, x, lam) / (lam + 0.5 * x);
  return (n - 0.5) / denom;
}

}  // namespace detail

const std::array<BoundInfo, kBoundKindCount>& all_bounds() noexcept { return kBounds; }

const BoundInfo& bound_info(BoundKind kind) noexcept {
  return kBounds[static_cast<std::size_t>(kind)];
}

std::string_view to_string(BoundKind kind) noexcept { return bound_info(kind).tag; }

std::optional<BoundKind> parse_bound_kind(std::string_view tag) noexcept {
  for (const BoundInfo& info : kBounds) {
    if (info.tag == tag) return info.kind;
  }
  return std::nullopt;
}

bool is_valid(BoundKind kind, double n) noexcept {
  return std::isfinite(n) && n > bound_info(kind).min_n;
}

double h_alpha_beta(const Parameters& p, double alpha, double beta) {
  detail::require_order(p, std::max(alpha, beta), "h_alpha_beta");
  return h_unchecked(p.n, p.x, alpha, beta);
}

double phi_lower_riccati(const Parameters& p) {
  require(p, BoundKind::phi_lower_riccati);
  return 0.5 * detail::shifted_root(p.x, 4.0 * p.n - 2.0);
}

double phi_upper_backward_simple(const Parameters& p) {
  require(p, BoundKind::phi_upper_backward_simple);
  return 0.5 * detail::shifted_root(p.x, 4.0 * p.n + 2.0);
}

double phi_upper_forward_simple(const Parameters& p) {
  require(p, BoundKind::phi_upper_forward_simple);
  return 0.5 * (p.n - 0.5) / (p.n - 1.5) * detail::shifted_root(p.x, 4.0 * p.n - 6.0);
}

double phi_lower_trig(const Parameters& p) {
  require(p, BoundKind::phi_lower_trig);
  return detail::phi_trig_unchecked(p.n, p.x);
}

double phi_lower_algebraic(const Parameters& p) {
  require(p, BoundKind::phi_lower_algebraic);
  return 0.5 * detail::shifted_root(p.x, 4.0 * w_algebraic_unchecked(p.n, p.x));
}

double phi_upper_backward_sharp(const Parameters& p) {
  require(p, BoundKind::phi_upper_backward_sharp);
  return detail::phi_bar_unchecked(p.n, p.x);
}

double phi_upper_forward_sharp(const Parameters& p) {
  require(p, BoundKind::phi_upper_forward_sharp);
  return detail::phi_tilde_unchecked(p.n, p.x);
}

double w_lower_trig(const Parameters& p) {
  require(p, BoundKind::w_lower_trig);
  return nullcline_w(p);
}

double w_lower_algebraic(const Parameters& p) {
  require(p, BoundKind::w_lower_algebraic);
  return w_algebraic_unchecked(p.n, p.x);
}

double w_upper_from_phi(const Parameters& p) {
  require(p, BoundKind::w_upper_from_phi);
  return std::min(w_bar_unchecked(p.n, p.x), w_tilde_unchecked(p.n, p.x));
}

WChain w_chain_pri1(const Parameters& p) {
  require(p, BoundKind::w_chain_pri1_lower);
  WChain chain;
  chain.lower = (p.n + 0.5) / (p.n + 1.5) * h_unchecked(p.n, p.x, 0.5, -1.5);
  chain.mid_lower = p.n - 0.5;
  chain.mid_upper = p.n + 0.5;
  if (is_valid(BoundKind::w_chain_pri1_upper, p.n)) {
    chain.upper = (p.n - 0.5) / (p.n - 1.5) * h_unchecked(p.n, p.x, 1.5, -0.5);
  }
  return chain;
}

double evaluate_bound(BoundKind kind, const Parameters& p) {
  switch (kind) {
    case BoundKind::phi_lower_riccati: return pcf::phi_lower_riccati(p);
    case BoundKind::phi_upper_backward_simple: return pcf::phi_upper_backward_simple(p);
    case BoundKind::phi_upper_forward_simple: return pcf::phi_upper_forward_simple(p);
    case BoundKind::phi_lower_trig: return pcf::phi_lower_trig(p);
    case BoundKind::phi_lower_algebraic: return pcf::phi_lower_algebraic(p);
    case BoundKind::phi_upper_backward_sharp: return pcf::phi_upper_backward_sharp(p);
    case BoundKind::phi_upper_forward_sharp: return pcf::phi_upper_forward_sharp(p);
    case BoundKind::w_lower_trig: return pcf::w_lower_trig(p);
    case BoundKind::w_lower_algebraic: return pcf::w_lower_algebraic(p);
    case BoundKind::w_upper_from_phi: return pcf::w_upper_from_phi(p);
    case BoundKind::w_chain_pri1_lower: return w_chain_pri1(p).lower;
    case BoundKind::w_chain_pri1_upper:
      require(p, kind);
      return *w_chain_pri1(p).upper;
  }
  return 0.0;
}

PhiEnclosure enclose_phi(const Parameters& p) {
  require(p, BoundKind::phi_lower_trig);
  PhiEnclosure e;
  e.lo = detail::phi_trig_unchecked(p.n, p.x);
  e.lo_kind = BoundKind::phi_lower_trig;
  e.hi = detail::phi_bar_unchecked(p.n, p.x);
  e.hi_kind = BoundKind::phi_upper_backward_sharp;
  if (is_valid(BoundKind::phi_upper_forward_sharp, p.n)) {
    const double tilde = detail::phi_tilde_unchecked(p.n, p.x);
    if (tilde < e.hi) {
      e.hi = tilde;
      e.hi_kind = BoundKind::phi_upper_forward_sharp;
    }
  }
  return e;
}

}  // namespace pcf
