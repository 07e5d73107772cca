// pcf: bounds, enclosures and diagnostics for ratios of parabolic cylinder functions.

#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcf/acceptance.hpp"
#include "pcf/analysis.hpp"
#include "pcf/bounds.hpp"
#include "pcf/output.hpp"
#include "pcf/reference.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

using pcf::Value;

struct Options {
  std::string format = "json-lines";

  double n = 0.0;
  double x = 0.0;
  std::vector<std::string> which{"all"};

  double rel_tol = pcf::kDefaultRelTol;
  int max_depth = pcf::kDefaultMaxDepth;

  double y = 0.0;
  double z = 0.0;
  double ratio_tol = 1e-10;
  bool frozen = false;
  bool algebraic = false;

  double epsilon = 0.0;
  double x_min = -10.0;
  double x_max = 10.0;
  int points = 81;

  std::string kind;
  std::vector<double> xs;
  std::vector<double> ns;

  std::string profile = "fast";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

pcf::OutputFormat output_format(const Options& o) {
  return *pcf::parse_output_format(o.format);
}

std::vector<pcf::BoundKind> requested_bounds(const std::vector<std::string>& which, bool& all) {
  std::vector<pcf::BoundKind> kinds;
  all = false;
  for (const std::string& item : which) {
    std::stringstream list(item);
    std::string tag;
    while (std::getline(list, tag, ',')) {
      if (tag.empty()) continue;
      if (tag == "all") {
        all = true;
        continue;
      }
      const auto kind = pcf::parse_bound_kind(tag);
      if (!kind) throw UsageError("unknown bound kind '" + tag + "'");
      kinds.push_back(*kind);
    }
  }
  if (all) {
    kinds.clear();
    for (const pcf::BoundInfo& info : pcf::all_bounds()) kinds.push_back(info.kind);
  }
  return kinds;
}

int cmd_bounds(const Options& o) {
  bool all = false;
  const auto kinds = requested_bounds(o.which, all);
  const pcf::Parameters p{o.n, o.x};
  std::vector<std::vector<Value>> rows;
  for (const pcf::BoundKind kind : kinds) {
    const pcf::BoundInfo& info = pcf::bound_info(kind);
    const bool valid = pcf::is_valid(kind, o.n);
    Value value;
    if (valid || !all) value = pcf::evaluate_bound(kind, p);  // throws DomainError when invalid
    rows.push_back({std::string(info.tag), o.n, o.x, value, valid, std::string(info.basis)});
  }
  pcf::RowWriter out(std::cout, output_format(o), {"kind", "n", "x", "value", "valid", "basis"});
  for (const auto& row : rows) out.write(row);
  return kExitOk;
}

int cmd_enclose(const Options& o) {
  const pcf::Enclosure e = pcf::cf_enclosure({o.n, o.x}, o.rel_tol, o.max_depth);
  pcf::RowWriter out(std::cout, output_format(o),
                     {"n", "x", "lo", "hi", "width_rel", "depth_used", "converged"});
  out.write({o.n, o.x, e.lo, e.hi, e.relative_width(), std::int64_t{e.depth_used}, e.converged});
  return kExitOk;
}

int cmd_ratio(const Options& o) {
  if (!(o.z >= o.y)) throw UsageError("ratio: requires z >= y");
  const pcf::RatioBounds r = pcf::u_ratio_bounds(o.n, o.y, o.z, o.ratio_tol);
  Value frozen;
  if (o.frozen) frozen = pcf::frozen_integral_bound(o.n, o.y, o.z, o.algebraic);
  pcf::RowWriter out(std::cout, output_format(o),
                     {"n", "y", "z", "lo", "hi", "quadrature_error", "converged", "frozen_hi"});
  out.write({o.n, o.y, o.z, r.lo, r.hi, r.quadrature_error, r.converged, frozen});
  return kExitOk;
}

int cmd_contour(const Options& o) {
  const pcf::ContourCurve c = pcf::contour(o.epsilon, o.x_min, o.x_max, o.points);
  pcf::RowWriter out(std::cout, output_format(o), {"epsilon", "x", "n", "residual"});
  for (const pcf::ContourPoint& pt : c.points) out.write({c.epsilon, pt.x, pt.n, pt.residual});
  if (!c.uncovered_x.empty()) {
    std::cerr << "contour: " << c.uncovered_x.size()
              << " x values skipped, error already below epsilon at n = 3/2\n";
  }
  return kExitOk;
}

std::vector<double> scan_points(const Options& o) {
  if (!o.xs.empty()) return o.xs;
  return pcf::linspace(o.x_min, o.x_max, o.points);
}

int cmd_sharpness(const Options& o) {
  const auto kind = pcf::parse_bound_kind(o.kind);
  if (!kind) throw UsageError("unknown bound kind '" + o.kind + "'");
  const std::vector<double> xs = scan_points(o);
  const auto records = pcf::sharpness_scan(*kind, o.n, xs);
  pcf::RowWriter out(std::cout, output_format(o),
                     {"kind", "n", "x", "raw_error", "scaled_error"});
  for (const auto& r : records) {
    out.write({std::string(pcf::to_string(r.bound_kind)), r.n, r.x, r.raw_error, r.scaled_error});
  }
  return kExitOk;
}

int cmd_zero_scan(const Options& o) {
  const auto records = pcf::zero_order_scan(o.ns);
  pcf::RowWriter out(std::cout, output_format(o), {"kind", "n", "raw_error", "scaled_error"});
  for (const auto& r : records) {
    out.write({std::string(pcf::to_string(r.bound_kind)), r.n, r.raw_error, r.scaled_error});
  }
  return kExitOk;
}

int cmd_monotonicity(const Options& o) {
  const std::vector<double> xs = scan_points(o);
  const pcf::MonotonicityReport r = pcf::monotonicity_scan(o.n, xs);
  pcf::RowWriter out(std::cout, output_format(o),
                     {"n", "points", "violations", "first_quantity", "first_x_left", "first_x_right"});
  Value quantity, left, right;
  if (!r.violations.empty()) {
    quantity = r.violations.front().quantity;
    left = r.violations.front().x_left;
    right = r.violations.front().x_right;
  }
  out.write({r.n, static_cast<std::int64_t>(r.points),
             static_cast<std::int64_t>(r.violations.size()), quantity, left, right});
  return kExitOk;
}

int cmd_check(const Options& o) {
  const auto results = pcf::run_acceptance(*pcf::parse_profile(o.profile));
  pcf::RowWriter out(std::cout, output_format(o), {"id", "name", "status", "seconds", "detail"});
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    out.write({std::int64_t{r.id}, r.name, std::string(r.passed ? "pass" : "fail"), r.seconds,
               r.detail});
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

void add_range(CLI::App* cmd, Options& o) {
  cmd->add_option("--x-min", o.x_min, "First x of the scan")->capture_default_str();
  cmd->add_option("--x-max", o.x_max, "Last x of the scan")->capture_default_str();
  cmd->add_option("--points", o.points, "Number of evenly spaced x")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds and enclosures for ratios of parabolic cylinder functions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json-lines", "csv", "human"}))
      ->capture_default_str();

  const auto fallthrough = [&](CLI::App* cmd) {
    cmd->fallthrough();
    return cmd;
  };

  auto* bounds = fallthrough(app.add_subcommand("bounds", "Evaluate closed-form bounds"));
  bounds->add_option("--n", o.n, "Order")->required();
  bounds->add_option("--x", o.x, "Argument")->required();
  bounds->add_option("--which", o.which, "Bound tags (comma separated) or 'all'")
      ->capture_default_str();

  auto* enclose = fallthrough(app.add_subcommand("enclose", "Continued-fraction enclosure of Phi"));
  enclose->add_option("--n", o.n, "Order")->required();
  enclose->add_option("--x", o.x, "Argument")->required();
  enclose->add_option("--rel-tol", o.rel_tol, "Target relative width")->capture_default_str();
  enclose->add_option("--max-depth", o.max_depth, "Largest recurrence depth")
      ->capture_default_str();

  auto* ratio = fallthrough(app.add_subcommand("ratio", "Bounds for U(n,z)/U(n,y)"));
  ratio->add_option("--n", o.n, "Order")->required();
  ratio->add_option("--y", o.y, "Lower limit")->required();
  ratio->add_option("--z", o.z, "Upper limit")->required();
  ratio->add_option("--rel-tol", o.ratio_tol, "Quadrature tolerance")->capture_default_str();
  ratio->add_flag("--frozen", o.frozen, "Also print the frozen-argument bound");
  ratio->add_flag("--algebraic", o.algebraic, "Freeze the algebraic w instead of the trigonometric");

  auto* contour = fallthrough(app.add_subcommand("contour", "Curve phitilde/phi - 1 = epsilon"));
  contour->add_option("--epsilon", o.epsilon, "Relative error level")->required();
  add_range(contour, o);

  auto* sharpness = fallthrough(app.add_subcommand("sharpness", "Relative error of one bound along x"));
  sharpness->add_option("--kind", o.kind, "Bound tag")->required();
  sharpness->add_option("--n", o.n, "Order")->required();
  sharpness->add_option("--xs", o.xs, "Explicit x values (overrides the range)")->delimiter(',');
  add_range(sharpness, o);

  auto* zero = fallthrough(app.add_subcommand("zero-scan", "Errors at x = 0 against order"));
  zero->add_option("--n", o.ns, "Orders")->required()->delimiter(',');

  auto* mono = fallthrough(app.add_subcommand("monotonicity", "Check that Phi and W increase"));
  mono->add_option("--n", o.n, "Order")->required();
  mono->add_option("--xs", o.xs, "Explicit sorted x values (overrides the range)")->delimiter(',');
  add_range(mono, o);

  auto* check = fallthrough(app.add_subcommand("check", "Run the acceptance criteria"));
  check->add_option("--profile", o.profile, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bounds) return cmd_bounds(o);
    if (*enclose) return cmd_enclose(o);
    if (*ratio) return cmd_ratio(o);
    if (*contour) return cmd_contour(o);
    if (*sharpness) return cmd_sharpness(o);
    if (*zero) return cmd_zero_scan(o);
    if (*mono) return cmd_monotonicity(o);
    if (*check) return cmd_check(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pcf::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pcf::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const pcf::BracketError& e) {
    std::cerr << "bracket error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
