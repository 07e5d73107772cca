#include "pcf/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "pcf/analysis.hpp"
#include "pcf/bounds.hpp"
#include "pcf/nullcline.hpp"
#include "pcf/parallel.hpp"
#include "pcf/reference.hpp"

namespace pcf {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Context {
  Profile profile;
  std::vector<double> x_grid(double step_full, double step_fast, double limit) const {
    const double step = profile == Profile::full ? step_full : step_fast;
    return linspace(-limit, limit, static_cast<int>(std::lround(2.0 * limit / step)) + 1);
  }
};

std::string num(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

std::string at(double n, double x) { return "(n=" + num(n) + ", x=" + num(x) + ")"; }

// Grid scan: check(n, x) returns an empty string when every relation holds.
struct GridScan {
  std::size_t points = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

GridScan scan_grid(const std::vector<double>& ns, const std::vector<double>& xs,
                   const std::function<std::string(double, double)>& check) {
  const std::size_t count = ns.size() * xs.size();
  const auto messages = parallel_map<std::string>(
      count, [&](std::size_t i) { return check(ns[i / xs.size()], xs[i % xs.size()]); });
  GridScan scan{count, 0, {}};
  for (const std::string& m : messages) {
    if (m.empty()) continue;
    if (scan.failures++ == 0) scan.first_failure = m;
  }
  return scan;
}

std::string describe(const GridScan& s) {
  std::string text = std::to_string(s.points) + " points, " + std::to_string(s.failures) +
                     " violations";
  if (s.failures) text += "; first: " + s.first_failure;
  return text;
}

bool in_band(double v, double lo, double hi) { return v >= lo && v <= hi; }

const std::vector<double> kChainOrders{1.6, 2.0, 5.0, 20.0, 100.0};

Outcome ordering_chain(const Context& ctx) {
  const auto start = Clock::now();
  const std::vector<double> xs = ctx.x_grid(0.5, 5.0, 50.0);
  const GridScan scan = scan_grid(kChainOrders, xs, [](double n, double x) -> std::string {
    const Parameters p{n, x};
    const double riccati = phi_lower_riccati(p);
    const double algebraic = phi_lower_algebraic(p);
    const double trig = phi_lower_trig(p);
    const double upper = std::min(phi_upper_backward_sharp(p), phi_upper_forward_sharp(p));
    const Enclosure e = cf_enclosure(p);
    if (!(riccati < algebraic)) return "riccati >= algebraic at " + at(n, x);
    if (!(algebraic < trig)) return "algebraic >= trig at " + at(n, x);
    if (!(trig < e.lo)) return "trig >= enclosure.lo at " + at(n, x);
    if (!(e.lo <= e.hi)) return "enclosure inverted at " + at(n, x);
    if (!(e.hi < upper)) return "enclosure.hi >= min(phibar, phitilde) at " + at(n, x);
    return {};
  });
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {scan.failures == 0 && seconds < 10.0, describe(scan) + ", " + num(seconds) + " s"};
}

Outcome w_chain(const Context& ctx) {
  const std::vector<double> xs = ctx.x_grid(0.5, 5.0, 50.0);
  const GridScan scan = scan_grid(kChainOrders, xs, [](double n, double x) -> std::string {
    const Parameters p{n, x};
    const WChain chain = w_chain_pri1(p);
    const double algebraic = w_lower_algebraic(p);
    const double trig = w_lower_trig(p);
    const Enclosure w = w_enclosure(p, 1e-12);
    double upper = w_upper_from_phi(p);
    if (chain.upper) upper = std::min(upper, *chain.upper);
    if (!(chain.lower < algebraic)) return "pri1 lower >= w^(a) at " + at(n, x);
    if (!(algebraic < trig)) return "w^(a) >= w at " + at(n, x);
    if (!(trig < w.lo)) return "w >= W enclosure at " + at(n, x);
    if (!(w.hi < upper)) return "W enclosure >= upper bounds at " + at(n, x);
    if (!(chain.mid_lower < w.lo && w.hi < chain.mid_upper)) {
      return "W outside (n-1/2, n+1/2) at " + at(n, x);
    }
    return {};
  });
  return {scan.failures == 0, describe(scan)};
}

double phi_reference(const Parameters& p, double* width = nullptr) {
  const Enclosure e = cf_enclosure(p, 1e-12);
  if (width) *width = e.relative_width();
  return e.midpoint();
}

Outcome sharpness_plus(const Context&) {
  const Parameters p{2.0, 30.0};
  double width = 0.0;
  const double phi = phi_reference(p, &width);
  const double scaled =
      (phi / phi_lower_trig(p) - 1.0) * std::pow(p.x, 6) / (2.0 * p.n + 1.0);
  return {in_band(scaled, 0.9, 1.1) && width <= 1e-12,
          "scaled " + num(scaled) + ", enclosure width " + num(width)};
}

Outcome sharpness_minus(const Context&) {
  const Parameters minus{2.0, -30.0};
  const Parameters plus{2.0, 30.0};
  const double phi_minus = phi_reference(minus);
  const double phi_plus = phi_reference(plus);
  const double x4 = std::pow(30.0, 4);
  const double x6 = std::pow(30.0, 6);
  const double trig = (phi_minus / phi_lower_trig(minus) - 1.0) * x4 / 2.0;
  const double alg_minus = (phi_minus / phi_lower_algebraic(minus) - 1.0) * x4 / 4.0;
  const double alg_plus = (phi_plus / phi_lower_algebraic(plus) - 1.0) * x6 / (2.0 * 5.0);
  const bool ok =
      in_band(trig, 0.9, 1.1) && in_band(alg_minus, 0.9, 1.1) && in_band(alg_plus, 0.9, 1.1);
  return {ok, "trig x=-30 " + num(trig) + ", algebraic x=-30 " + num(alg_minus) +
                  ", algebraic x=+30 " + num(alg_plus)};
}

Outcome w_sharpness(const Context&) {
  const double n = 2.0;
  bool ok = true;
  std::string detail;
  for (const double x : {50.0, -50.0}) {
    const Parameters p{n, x};
    const double w_true = w_enclosure(p, 1e-12).midpoint();
    const double coefficient = x > 0 ? 2.0 * n + 1.0 : 2.0 * n - 1.0;
    const double x4 = std::pow(x, 4);
    const double trig_rel = w_true / w_lower_trig(p) - 1.0;
    const double alg_rel = w_true / w_lower_algebraic(p) - 1.0;
    const double trig = trig_rel * x4 / coefficient;
    const double alg = alg_rel * x4 / coefficient;
    ok = ok && in_band(trig, 0.9, 1.1) && in_band(alg, 0.9, 1.1);
    detail += "x=" + num(x) + ": w " + num(trig) + ", w^(a) " + num(alg) +
              " [relative x^4 excess " + num(trig_rel * x4) + ", " + num(alg_rel * x4) +
              "; absolute (W-w) x^4/(2n+-1) " +
              num((w_true - w_lower_trig(p)) * x4 / coefficient) + ", " +
              num((w_true - w_lower_algebraic(p)) * x4 / coefficient) + "]; ";
  }
  return {ok, detail};
}

Outcome zero_scaling(const Context&) {
  const std::vector<double> ns{1000.0};
  const auto records = zero_order_scan(ns);
  const double riccati = records[0].scaled_error;
  const double trig = records[1].scaled_error;
  const double algebraic = records[2].scaled_error;
  const double n = 40.0;
  const Enclosure e = cf_enclosure({n, 0.0}, 1e-12);
  const double exact = phi_at_zero(n);
  const double agreement = std::abs(e.midpoint() - exact) / exact;
  const bool ok = in_band(riccati, 0.99, 1.01) && in_band(trig, 0.98, 1.02) &&
                  in_band(algebraic, 0.98, 1.02) && agreement <= 1e-11;
  return {ok, "4n " + num(riccati) + ", 16n^2 " + num(trig) + ", 8n^2 " + num(algebraic) +
                  ", n=40 enclosure vs Gamma ratio " + num(agreement)};
}

Outcome monotonicity(const Context& ctx) {
  const std::vector<double> xs = ctx.x_grid(0.25, 2.0, 20.0);
  std::size_t violations = 0;
  std::string first;
  for (const double n : {0.6, 1.0, 2.0, 5.0, 20.0}) {
    const MonotonicityReport r = monotonicity_scan(n, xs);
    if (!r.violations.empty() && first.empty()) {
      first = r.violations.front().quantity + " at n=" + num(n) + ", x in [" +
              num(r.violations.front().x_left) + ", " + num(r.violations.front().x_right) + "]";
    }
    violations += r.violations.size();
  }
  const double n = 2.0;
  const double h = 1e-4;
  double worst = 0.0;
  for (const double x : {-5.0, 0.0, 5.0}) {
    const double derivative =
        (phi_reference({n, x + h}) - phi_reference({n, x - h})) / (2.0 * h);
    const double w = w_enclosure({n, x}, 1e-12).midpoint();
    worst = std::max(worst, std::abs(derivative - (w - (n - 0.5))));
  }
  std::string detail = std::to_string(violations) + " violations";
  if (!first.empty()) detail += " (first: " + first + ")";
  detail += ", max |FD - (W - n + 1/2)| " + num(worst);
  return {violations == 0 && worst <= 1e-5, detail};
}

Outcome cubic(const Context& ctx) {
  const std::vector<double> ns{0.51, 0.6, 1.0, 1.5001, 2.0, 5.0, 10.0, 100.0};
  const std::vector<double> xs = ctx.x_grid(0.5, 2.5, 50.0);
  double worst_residual = 0.0;
  double worst_symmetry = 0.0;
  const GridScan scan = scan_grid(ns, xs, [](double n, double x) -> std::string {
    const Parameters p{n, x};
    if (!(scaled_discriminant(p) > 0.0)) return "discriminant not positive at " + at(n, x);
    const CubicRoots r = cubic_roots(p);
    for (const double lam : {r.lambda_minus, r.lambda_zero, r.lambda_plus}) {
      const double scale = std::max(1.0, std::abs(lam * lam * lam));
      if (std::abs(cubic_residual(p, lam)) > 1e-12 * scale) return "residual at " + at(n, x);
    }
    const CubicRoots mirrored = cubic_roots({n, -x});
    if (std::abs(mirrored.lambda_plus + r.lambda_minus) > 1e-12 * std::abs(r.lambda_minus)) {
      return "lambda+ symmetry at " + at(n, x);
    }
    if (std::abs(mirrored.lambda_zero + r.lambda_zero) >
        1e-12 * std::max(std::abs(r.lambda_zero), std::numeric_limits<double>::min())) {
      return "lambda0 symmetry at " + at(n, x);
    }
    const double half = 0.5 * std::abs(x);
    if (!(r.lambda_plus > half && r.lambda_minus < -half)) return "outer roots at " + at(n, x);
    const bool middle_ok = x == 0.0 ? r.lambda_zero == 0.0 : std::abs(r.lambda_zero) < half;
    if (!middle_ok) return "middle root at " + at(n, x);
    if (!(r.lambda_minus < r.lambda_zero && r.lambda_zero < r.lambda_plus)) {
      return "ordering at " + at(n, x);
    }
    return {};
  });
  for (const double n : ns) {
    for (const double x : xs) {
      const Parameters p{n, x};
      const CubicRoots r = cubic_roots(p);
      for (const double lam : {r.lambda_minus, r.lambda_zero, r.lambda_plus}) {
        worst_residual = std::max(worst_residual, std::abs(cubic_residual(p, lam)) /
                                                      std::max(1.0, std::abs(lam * lam * lam)));
      }
      worst_symmetry = std::max(worst_symmetry, std::abs(lambda_plus({n, -x}) + r.lambda_minus) /
                                                    std::abs(r.lambda_minus));
    }
  }
  return {scan.failures == 0, describe(scan) + ", max residual " + num(worst_residual) +
                                  ", max symmetry defect " + num(worst_symmetry)};
}

double simpson(const std::vector<double>& f, double h) {
  double sum = f.front() + f.back();
  for (std::size_t i = 1; i + 1 < f.size(); ++i) sum += (i % 2 ? 4.0 : 2.0) * f[i];
  return sum * h / 3.0;
}

Outcome u_ratio(const Context&) {
  const double n = 2.0;
  const double y = -1.0;
  const double z = 1.0;
  std::map<double, double> cache;
  const auto shifted_phi = [&](double x) {
    auto it = cache.find(x);
    if (it == cache.end()) it = cache.emplace(x, phi_reference({n, x}) - 0.5 * x).first;
    return it->second;
  };
  double previous = std::numeric_limits<double>::quiet_NaN();
  double integral = 0.0;
  int intervals = 8;
  bool settled = false;
  for (; intervals <= 4096; intervals *= 2) {
    std::vector<double> f;
    const double h = (z - y) / intervals;
    for (int i = 0; i <= intervals; ++i) f.push_back(shifted_phi(i == intervals ? z : y + i * h));
    integral = simpson(f, h);
    if (std::abs(integral - previous) <= 1e-9 * std::abs(integral)) {
      settled = true;
      break;
    }
    previous = integral;
  }
  const double truth = std::exp(-integral);
  const RatioBounds r = u_ratio_bounds(n, y, z, 1e-10);
  const double frozen = frozen_integral_bound(n, y, z, false);
  const double gap = r.hi / r.lo - 1.0;
  const bool contains = r.lo <= truth && truth <= r.hi;
  const bool ok = settled && contains && frozen >= r.hi && gap < 1e-2;
  return {ok, std::string("Simpson ") + (settled ? "settled" : "did not settle") + " at " +
                  std::to_string(intervals) + " intervals, true " + num(truth) + " in [" +
                  num(r.lo) + ", " + num(r.hi) + "]: " + (contains ? "yes" : "no") +
                  ", frozen " + num(frozen) + ", gap hi/lo-1 " + num(gap)};
}

Outcome contours(const Context& ctx) {
  const int points = ctx.profile == Profile::full ? 81 : 21;
  const std::vector<double> epsilons{1e-3, 1e-4, 1e-5};
  std::vector<std::map<double, double>> curves;
  std::size_t bad_residuals = 0;
  std::size_t produced = 0;
  std::string coverage;
  for (const double eps : epsilons) {
    const ContourCurve c = contour(eps, -10.0, 10.0, points);
    std::map<double, double> by_x;
    for (const ContourPoint& pt : c.points) {
      const double residual = contour_error(pt.n, pt.x) - eps;
      if (!(std::abs(residual) <= 1e-3 * eps)) ++bad_residuals;
      by_x[pt.x] = pt.n;
    }
    produced += c.points.size();
    coverage += " eps=" + num(eps) + ": " + std::to_string(c.points.size()) + "/" +
                std::to_string(points);
    curves.push_back(std::move(by_x));
  }
  std::size_t nesting_failures = 0;
  std::size_t shared = 0;
  for (std::size_t k = 0; k + 1 < curves.size(); ++k) {
    for (const auto& [x, n_outer] : curves[k]) {
      const auto it = curves[k + 1].find(x);
      if (it == curves[k + 1].end()) continue;
      ++shared;
      if (!(it->second > n_outer)) ++nesting_failures;
    }
  }
  const bool ok = bad_residuals == 0 && nesting_failures == 0 &&
                  std::all_of(curves.begin(), curves.end(), [](const auto& c) { return !c.empty(); });
  return {ok, std::to_string(produced) + " points (" + coverage.substr(1) + "), " +
                  std::to_string(bad_residuals) + " residual failures, " +
                  std::to_string(nesting_failures) + "/" + std::to_string(shared) +
                  " nesting failures"};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)(const Context&);
};

constexpr Criterion kCriteria[] = {
    {1, "phi ordering chain", ordering_chain},
    {2, "W ordering chain", w_chain},
    {3, "trig sharpness as x -> +inf", sharpness_plus},
    {4, "trig and algebraic sharpness as x -> -inf", sharpness_minus},
    {5, "W lower bound sharpness", w_sharpness},
    {6, "x = 0 scaling laws", zero_scaling},
    {7, "monotonicity and W identity", monotonicity},
    {8, "nullcline cubic", cubic},
    {9, "U ratio bounds", u_ratio},
    {10, "error contours", contours},
};

bool selected(const std::vector<int>& only, int id) {
  return only.empty() || std::find(only.begin(), only.end(), id) != only.end();
}

}  // namespace

std::optional<Profile> parse_profile(std::string_view name) noexcept {
  if (name == "fast") return Profile::fast;
  if (name == "full") return Profile::full;
  return std::nullopt;
}

std::vector<CriterionResult> run_acceptance(Profile profile, const std::vector<int>& only) {
  const Context ctx{profile};
  std::vector<CriterionResult> results;
  double total = 0.0;
  for (const Criterion& c : kCriteria) {
    if (!selected(only, c.id)) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run(ctx);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    total += seconds;
    results.push_back({c.id, c.name, outcome.passed, outcome.detail, seconds});
  }
  if (selected(only, 11)) {
    const double budget = 60.0;
    results.push_back({11,
                       profile == Profile::full ? "full profile runtime" : "fast profile runtime",
                       total < budget, num(total) + " s (budget " + num(budget) + " s)", total});
  }
  return results;
}

}  // namespace pcf
