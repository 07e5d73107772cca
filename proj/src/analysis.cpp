#include "pcf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pcf/parallel.hpp"

namespace pcf {
namespace {

constexpr double kScanTolerance = 1e-12;
constexpr double kContourOrderFloor = 1.5 + 1e-6;
constexpr double kContourOrderCap = 1e7;
constexpr int kBisectionLimit = 200;

RateModel order_only(int order) { return {1.0, order, false}; }

double reference_value(BoundTarget target, const Parameters& p) {
  return target == BoundTarget::phi ? cf_enclosure(p, kScanTolerance).midpoint()
                                    : w_enclosure(p, kScanTolerance).midpoint();
}

struct ContourSolution {
  bool covered = false;
  ContourPoint point;
};

ContourSolution solve_contour(double epsilon, double x) {
  const auto g = [epsilon, x](double n) { return contour_error(n, x) - epsilon; };
  double lo = kContourOrderFloor;
  double g_lo = g(lo);
  if (g_lo <= 0.0) return {};
  double hi = 2.0 * lo;
  double g_hi = g(hi);
  while (g_hi > 0.0) {
    lo = hi;
    g_lo = g_hi;
    hi *= 2.0;
    if (hi > kContourOrderCap) {
      throw BracketError("contour: no sign change up to n = 1e7 at x = " + format_real(x));
    }
    g_hi = g(hi);
  }
  for (int i = 0; i < kBisectionLimit && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    if (!(g_lo > 0.0 && g_hi <= 0.0)) {
      throw BracketError("contour: bracket lost its sign change at x = " + format_real(x));
    }
    const double mid = 0.5 * (lo + hi);
    const double g_mid = g(mid);
    if (g_mid > 0.0) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
    if (std::abs(g_mid) <= 1e-9 * epsilon) break;
  }
  const bool take_lo = std::abs(g_lo) < std::abs(g_hi);
  return {true, {x, take_lo ? lo : hi, take_lo ? g_lo : g_hi}};
}

}  // namespace

RateModel predicted_rate(BoundKind kind, double n, Direction direction) {
  const bool plus = direction == Direction::x_plus;
  switch (kind) {
    case BoundKind::phi_lower_riccati: return order_only(2);
    case BoundKind::phi_upper_backward_simple: return order_only(plus ? 4 : 0);
    case BoundKind::phi_upper_forward_simple: return order_only(plus ? 0 : 4);
    case BoundKind::phi_lower_trig:
      return plus ? RateModel{2.0 * n + 1.0, 6, true} : RateModel{2.0, 4, true};
    case BoundKind::phi_lower_algebraic:
      return plus ? RateModel{2.0 * (2.0 * n + 1.0), 6, true} : RateModel{4.0, 4, true};
    case BoundKind::phi_upper_backward_sharp: return order_only(plus ? 8 : 2);
    case BoundKind::phi_upper_forward_sharp: return order_only(plus ? 4 : 6);
    case BoundKind::w_lower_trig: return {2.0, 4, true};
    case BoundKind::w_lower_algebraic: return {4.0, 4, true};
    case BoundKind::w_upper_from_phi: return order_only(6);
    case BoundKind::w_chain_pri1_lower: return order_only(plus ? 2 : 0);
    case BoundKind::w_chain_pri1_upper: return order_only(plus ? 0 : 2);
  }
  return {};
}

std::vector<SharpnessRecord> sharpness_scan(BoundKind kind, double n, std::span<const double> xs) {
  const BoundInfo& info = bound_info(kind);
  detail::require_order(n, std::max(info.min_n, 0.5), info.tag.data());
  return parallel_map<SharpnessRecord>(xs.size(), [&](std::size_t i) {
    const Parameters p{n, xs[i]};
    const double bound = evaluate_bound(kind, p);
    const double truth = reference_value(info.target, p);
    const double raw = info.side == BoundSide::lower ? truth / bound - 1.0 : bound / truth - 1.0;
    const RateModel rate =
        predicted_rate(kind, n, p.x >= 0.0 ? Direction::x_plus : Direction::x_minus);
    const double scaled = raw * std::pow(std::abs(p.x), rate.order) / rate.coefficient;
    return SharpnessRecord{n, p.x, kind, raw, scaled};
  });
}

std::vector<SharpnessRecord> zero_order_scan(std::span<const double> ns) {
  std::vector<SharpnessRecord> out;
  out.reserve(3 * ns.size());
  for (const double n : ns) {
    const double delta = phi_at_zero_log_excess(n);
    const double riccati = std::expm1(delta - 0.5 * std::log1p(-0.5 / n));
    const double trig = std::expm1(delta);
    const double algebraic = std::expm1(delta - 0.25 * std::log1p(-0.25 / (n * n)));
    out.push_back({n, 0.0, BoundKind::phi_lower_riccati, riccati, riccati * 4.0 * n});
    out.push_back({n, 0.0, BoundKind::phi_lower_trig, trig, trig * 16.0 * n * n});
    out.push_back({n, 0.0, BoundKind::phi_lower_algebraic, algebraic, algebraic * 8.0 * n * n});
  }
  return out;
}

ErrorPeak error_peak(std::span<const SharpnessRecord> records) {
  ErrorPeak peak{0.0, -1.0};
  for (const SharpnessRecord& r : records) {
    if (r.raw_error > peak.raw_error) peak = {r.x, r.raw_error};
  }
  return peak;
}

MonotonicityReport monotonicity_scan(double n, std::span<const double> xs) {
  detail::require_order(n, 0.5, "monotonicity_scan");
  if (!std::is_sorted(xs.begin(), xs.end())) {
    throw ArgumentError("monotonicity_scan: xs must be sorted ascending");
  }
  struct Sample {
    Enclosure phi;
    Enclosure w;
  };
  const auto samples = parallel_map<Sample>(xs.size(), [&](std::size_t i) {
    const Parameters p{n, xs[i]};
    return Sample{cf_enclosure(p, kScanTolerance), w_enclosure(p, kScanTolerance)};
  });

  MonotonicityReport report{n, xs.size(), {}};
  const auto increasing = [](const Enclosure& a, const Enclosure& b) {
    const double combined = (a.hi - a.lo) + (b.hi - b.lo);
    return b.lo > a.hi - combined;
  };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].phi.lo > 0.0)) report.violations.push_back({"phi", xs[i], xs[i]});
    if (i == 0 || xs[i] == xs[i - 1]) continue;
    if (!increasing(samples[i - 1].phi, samples[i].phi)) {
      report.violations.push_back({"phi", xs[i - 1], xs[i]});
    }
    if (!increasing(samples[i - 1].w, samples[i].w)) {
      report.violations.push_back({"w", xs[i - 1], xs[i]});
    }
  }
  return report;
}

double contour_error(double n, double x) {
  const Parameters p{n, x};
  return phi_upper_forward_sharp(p) / phi_lower_trig(p) - 1.0;
}

ContourCurve contour(double epsilon, double x_min, double x_max, int points) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ArgumentError("contour: epsilon must be positive and finite");
  }
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_max < x_min) {
    throw ArgumentError("contour: requires finite x_min <= x_max");
  }
  if (points < 1) throw ArgumentError("contour: points must be at least 1");

  const std::vector<double> xs = linspace(x_min, x_max, points);
  const auto solutions = parallel_map<ContourSolution>(
      xs.size(), [&](std::size_t i) { return solve_contour(epsilon, xs[i]); });

  ContourCurve curve;
  curve.epsilon = epsilon;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (solutions[i].covered) {
      curve.points.push_back(solutions[i].point);
    } else {
      curve.uncovered_x.push_back(xs[i]);
    }
  }
  return curve;
}

std::vector<double> linspace(double first, double last, int count) {
  std::vector<double> xs;
  if (count <= 0) return xs;
  xs.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    xs.push_back(first);
    return xs;
  }
  const double step = (last - first) / (count - 1);
  for (int i = 0; i < count; ++i) xs.push_back(i + 1 == count ? last : first + i * step);
  return xs;
}

}  // namespace pcf
