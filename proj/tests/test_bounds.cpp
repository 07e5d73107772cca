#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle/reference_values.hpp"
#include "pcf/bounds.hpp"
#include "pcf/reference.hpp"
#include "support.hpp"

namespace pcf {
namespace {

using std::numbers::sqrt2;
using test::rel_diff;

double oracle_phi(double n, double x) {
  for (const auto& s : oracle::kRatios) {
    if (s.n == n && s.x == x) return s.phi;
  }
  ADD_FAILURE() << "no oracle value for " << n << ", " << x;
  return NAN;
}

double oracle_w(double n, double x) {
  for (const auto& s : oracle::kRatios) {
    if (s.n == n && s.x == x) return s.w;
  }
  ADD_FAILURE() << "no oracle value for " << n << ", " << x;
  return NAN;
}

TEST(BoundKindTable, TagsAndThresholds) {
  EXPECT_EQ(all_bounds().size(), 12u);
  for (const BoundInfo& info : all_bounds()) {
    EXPECT_EQ(parse_bound_kind(info.tag), info.kind);
    EXPECT_EQ(to_string(info.kind), info.tag);
  }
  EXPECT_FALSE(parse_bound_kind("phi_lower_nonsense"));
  EXPECT_EQ(bound_info(BoundKind::phi_upper_backward_simple).min_n, -0.5);
  EXPECT_EQ(bound_info(BoundKind::phi_upper_forward_sharp).min_n, 1.5);
  EXPECT_EQ(bound_info(BoundKind::w_chain_pri1_upper).min_n, 1.5);
  EXPECT_EQ(bound_info(BoundKind::w_lower_algebraic).min_n, 0.5);
}

TEST(BoundKindTable, EveryBoundRejectsItsThreshold) {
  for (const BoundInfo& info : all_bounds()) {
    EXPECT_THROW(evaluate_bound(info.kind, {info.min_n, 0.3}), DomainError) << info.tag;
    EXPECT_NO_THROW(evaluate_bound(info.kind, {info.min_n + 1e-9, 0.3})) << info.tag;
    EXPECT_FALSE(is_valid(info.kind, info.min_n));
    EXPECT_TRUE(is_valid(info.kind, std::nextafter(info.min_n, 10.0)));
  }
}

TEST(HAlphaBeta, ClosedValueAtOrigin) {
  EXPECT_LT(rel_diff(h_alpha_beta({1.5, 0.0}, 0.5, -0.5), sqrt2), 1e-15);
}

TEST(HAlphaBeta, SwapsParametersUnderReflection) {
  const double a = h_alpha_beta({2.0, 5.0}, 0.5, -0.5);
  const double b = h_alpha_beta({2.0, -5.0}, -0.5, 0.5);
  EXPECT_LT(rel_diff(a, b), 1e-12);
}

TEST(HAlphaBeta, LargeArgumentExpansion) {
  const double n = 2.0, alpha = 0.5, beta = -0.5, x = 30.0;
  const double x2 = x * x;
  const double expansion =
      (n - beta) * (1.0 - (alpha - beta) / x2 * (1.0 - (3.0 * n - alpha - 2.0 * beta) / x2));
  EXPECT_LT(std::abs(h_alpha_beta({n, x}, alpha, beta) - expansion), 200.0 / std::pow(x, 6));
}

TEST(HAlphaBeta, RequiresOrderAboveBothParameters) {
  EXPECT_THROW(h_alpha_beta({1.5, 0.0}, 1.5, -0.5), DomainError);
  EXPECT_THROW(h_alpha_beta({1.0, 0.0}, 0.5, 1.0), DomainError);
}

TEST(PhiLowerRiccati, Examples) {
  EXPECT_NEAR(phi_lower_riccati({1.0, 0.0}), 0.7071067811865476, 1e-16);
  EXPECT_NEAR(phi_lower_riccati({1.5, 0.0}), 1.0, 1e-16);
  EXPECT_LT(rel_diff(phi_lower_riccati({2.0, -10.0}), (-10.0 + std::sqrt(106.0)) / 2.0), 1e-13);
}

TEST(PhiUpperBackwardSimple, Examples) {
  EXPECT_NEAR(phi_upper_backward_simple({1.0, 0.0}), std::sqrt(6.0) / 2.0, 1e-15);
  EXPECT_NEAR(phi_upper_backward_simple({0.0, 0.0}), sqrt2 / 2.0, 1e-15);
  const double excess = phi_upper_backward_simple({1.0, 50.0}) / oracle_phi(1.0, 50.0) - 1.0;
  EXPECT_GT(excess, 1e-8);
  EXPECT_LT(excess, 1e-6);
}

TEST(PhiUpperForwardSimple, Examples) {
  EXPECT_NEAR(phi_upper_forward_simple({2.0, 0.0}), 3.0 * sqrt2 / 2.0, 1e-15);
  EXPECT_NEAR(phi_upper_forward_simple({5.0, 0.0}), 0.5 * (4.5 / 3.5) * std::sqrt(14.0), 1e-14);
  const double excess = phi_upper_forward_simple({2.0, -50.0}) / oracle_phi(2.0, -50.0) - 1.0;
  EXPECT_GT(excess, 0.0);
  EXPECT_LT(excess, 1e-6);
}

TEST(PhiLowerTrig, Examples) {
  EXPECT_NEAR(phi_lower_trig({1.0, 0.0}), 1.0, 4e-16);
  EXPECT_NEAR(phi_lower_trig({4.0, 0.0}), 2.0, 8e-16);
  const double scaled =
      (oracle_phi(2.0, 30.0) / phi_lower_trig({2.0, 30.0}) - 1.0) * std::pow(30.0, 6) / 5.0;
  EXPECT_GE(scaled, 0.9);
  EXPECT_LE(scaled, 1.1);
}

TEST(PhiLowerAlgebraic, Examples) {
  EXPECT_NEAR(phi_lower_algebraic({1.5, 0.0}), std::pow(2.0, 0.25), 1e-15);
  EXPECT_NEAR(phi_lower_algebraic({1.0, 0.0}), std::pow(0.75, 0.25), 1e-15);
  const double scaled =
      (oracle_phi(2.0, -30.0) / phi_lower_algebraic({2.0, -30.0}) - 1.0) * std::pow(30.0, 4) / 4.0;
  EXPECT_GE(scaled, 0.9);
  EXPECT_LE(scaled, 1.1);
}

TEST(PhiUpperBackwardSharp, Examples) {
  EXPECT_NEAR(phi_upper_backward_sharp({1.0, 0.0}), 3.0 / (2.0 * sqrt2), 1e-15);
  EXPECT_NEAR(phi_upper_backward_sharp({0.0, 0.0}), 0.5, 4e-16);
  const Parameters p{2.0, 20.0};
  EXPECT_LT(phi_upper_backward_sharp(p) / phi_lower_trig(p) - 1.0, 1e-7);
}

TEST(PhiUpperForwardSharp, Examples) {
  EXPECT_NEAR(phi_upper_forward_sharp({2.0, 0.0}), 1.5, 1e-15);
  EXPECT_NEAR(phi_upper_forward_sharp({2.5, 0.0}), 2.0 / std::sqrt(1.5), 1e-15);
  // Frozen mpmath values at (n=2, x=-20). The upper bound is within 1e-7 of the truth, but the
  // bracket it forms with the trig lower bound is 1.23e-5 wide, set by the trig error 2/x^4.
  const Parameters p{2.0, -20.0};
  const double truth = 0.074906249556080826;
  EXPECT_LT(phi_upper_forward_sharp(p) / truth - 1.0, 1e-7);
  EXPECT_GT(phi_upper_forward_sharp(p) / truth - 1.0, 0.0);
  EXPECT_NEAR(phi_upper_forward_sharp(p) / phi_lower_trig(p) - 1.0, 1.2283577842e-5, 1e-12);
}

TEST(WLowerTrig, AliasAndRelativeError) {
  EXPECT_NEAR(w_lower_trig({1.0, 0.0}), 1.0, 4e-16);
  for (const double x : {50.0, -50.0}) {
    const double coefficient = x > 0 ? 5.0 : 3.0;
    const double excess = oracle_w(2.0, x) / w_lower_trig({2.0, x}) - 1.0;
    EXPECT_GT(excess, 0.0);
    EXPECT_LT(excess, coefficient / std::pow(x, 4));
  }
}

TEST(WLowerAlgebraic, Examples) {
  EXPECT_NEAR(w_lower_algebraic({1.5, 0.0}), sqrt2, 1e-15);
  EXPECT_LT(w_lower_algebraic({2.0, 10.0}), w_lower_trig({2.0, 10.0}));
}

TEST(WLowerAlgebraic, AbsoluteGapToTrigDecaysAsInverseFourthPower) {
  const Parameters p{2.0, 100.0};
  const double scaled = (w_lower_trig(p) - w_lower_algebraic(p)) * 1e8 / (2.0 * p.n + 1.0);
  EXPECT_GE(scaled, 0.8);
  EXPECT_LE(scaled, 1.2);
}

TEST(WUpperFromPhi, Examples) {
  const Parameters origin{2.0, 0.0};
  const double t =
      std::min(phi_upper_backward_sharp(origin), phi_upper_forward_sharp(origin));
  EXPECT_LT(rel_diff(w_upper_from_phi(origin), t * t), 1e-15);
  EXPECT_GE(w_upper_from_phi({2.0, 10.0}), w_lower_trig({2.0, 10.0}));
  EXPECT_GE(w_upper_from_phi({5.0, -10.0}), oracle_w(5.0, -10.0));
}

TEST(WChainPri1, CentralConstantsBracketTrueValue) {
  const WChain chain = w_chain_pri1({2.0, 0.0});
  EXPECT_EQ(chain.mid_lower, 1.5);
  EXPECT_EQ(chain.mid_upper, 2.5);
  const double w = oracle_w(2.0, 0.0);
  EXPECT_LT(chain.mid_lower, w);
  EXPECT_LT(w, chain.mid_upper);
  EXPECT_LT(rel_diff(w, std::pow(oracle_phi(2.0, 0.0), 2)), 1e-15);
  ASSERT_TRUE(chain.upper);
  EXPECT_LT(chain.lower, w);
  EXPECT_LT(w, *chain.upper);
}

TEST(WChainPri1, OuterBoundsApproachCentralConstants) {
  const double n = 2.0;
  const double x = 100.0;
  const double x2 = x * x;
  const WChain right = w_chain_pri1({n, x});
  const double lower_expansion = (n + 0.5) * (1.0 - 2.0 / x2 + 2.0 * (3.0 * n + 2.5) / (x2 * x2));
  EXPECT_LT(std::abs(right.lower - lower_expansion), 1000.0 / std::pow(x, 6));
  const WChain left = w_chain_pri1({n, -x});
  ASSERT_TRUE(left.upper);
  const double upper_expansion = (n - 0.5) * (1.0 + 2.0 / x2 - 2.0 * (3.0 * n - 2.5) / (x2 * x2));
  EXPECT_LT(std::abs(*left.upper - upper_expansion), 200.0 / std::pow(x, 6));
}

TEST(WChainPri1, UpperAbsentUpToThreeHalves) {
  EXPECT_FALSE(w_chain_pri1({1.0, 0.0}).upper);
  EXPECT_FALSE(w_chain_pri1({1.5, 2.0}).upper);
  EXPECT_TRUE(w_chain_pri1({1.5000001, 2.0}).upper);
  EXPECT_THROW(w_chain_pri1({0.5, 0.0}), DomainError);
  EXPECT_THROW(evaluate_bound(BoundKind::w_chain_pri1_upper, {1.5, 0.0}), DomainError);
}

TEST(EnclosePhi, Composition) {
  const PhiEnclosure at2 = enclose_phi({2.0, 0.0});
  EXPECT_NEAR(at2.lo, sqrt2, 4e-16);
  EXPECT_EQ(at2.hi, std::min(phi_upper_backward_sharp({2.0, 0.0}),
                             phi_upper_forward_sharp({2.0, 0.0})));
  const PhiEnclosure at1 = enclose_phi({1.0, 0.0});
  EXPECT_EQ(at1.hi_kind, BoundKind::phi_upper_backward_sharp);
  EXPECT_EQ(at1.hi, phi_upper_backward_sharp({1.0, 0.0}));
  const PhiEnclosure e = enclose_phi({10.0, 5.0});
  // mpmath: 1.0183321975e-4, most of it from the trig lower bound (8.3e-5 below the truth).
  EXPECT_NEAR((e.hi - e.lo) / e.lo, 1.0183321975e-4, 1e-12);
  EXPECT_THROW(enclose_phi({0.5, 0.0}), DomainError);
}

TEST(EnclosePhi, ContainsOracle) {
  for (const auto& s : oracle::kRatios) {
    const PhiEnclosure e = enclose_phi({s.n, s.x});
    EXPECT_LT(e.lo, s.phi) << s.n << " " << s.x;
    EXPECT_GT(e.hi, s.phi) << s.n << " " << s.x;
  }
}

TEST(BoundProperties, PhiOrderingChain) {
  test::ParameterSource source(1.5);
  for (int i = 0; i < 3000; ++i) {
    const Parameters p{source.order(), source.argument()};
    const double riccati = phi_lower_riccati(p);
    const double algebraic = phi_lower_algebraic(p);
    const double trig = phi_lower_trig(p);
    ASSERT_LT(riccati, algebraic) << p.n << " " << p.x;
    ASSERT_LT(algebraic, trig) << p.n << " " << p.x;
    ASSERT_LT(trig, phi_upper_backward_sharp(p)) << p.n << " " << p.x;
    ASSERT_LT(trig, phi_upper_forward_sharp(p)) << p.n << " " << p.x;
    ASSERT_LT(phi_upper_backward_sharp(p), phi_upper_backward_simple(p)) << p.n << " " << p.x;
    ASSERT_LT(riccati, phi_upper_backward_simple(p)) << p.n << " " << p.x;
    ASSERT_LT(trig, phi_upper_forward_simple(p)) << p.n << " " << p.x;
  }
}

TEST(BoundProperties, WOrderingChain) {
  test::ParameterSource source(1.5);
  for (int i = 0; i < 3000; ++i) {
    const Parameters p{source.order(), source.argument()};
    const WChain chain = w_chain_pri1(p);
    const double algebraic = w_lower_algebraic(p);
    const double trig = w_lower_trig(p);
    const double upper = w_upper_from_phi(p);
    ASSERT_LT(chain.lower, algebraic) << p.n << " " << p.x;
    ASSERT_LT(algebraic, trig) << p.n << " " << p.x;
    ASSERT_LT(trig, upper) << p.n << " " << p.x;
    ASSERT_TRUE(chain.upper);
    ASSERT_LT(upper, *chain.upper) << p.n << " " << p.x;
  }
}

TEST(BoundProperties, PhiBoundsIncreaseInX) {
  const BoundKind phi_kinds[] = {
      BoundKind::phi_lower_riccati,        BoundKind::phi_upper_backward_simple,
      BoundKind::phi_upper_forward_simple, BoundKind::phi_lower_trig,
      BoundKind::phi_lower_algebraic,      BoundKind::phi_upper_backward_sharp,
      BoundKind::phi_upper_forward_sharp};
  for (const double n : {1.6, 2.0, 5.0, 20.0, 100.0}) {
    for (const double x : test::symmetric_grid(50.0, 0.5)) {
      for (const BoundKind kind : phi_kinds) {
        EXPECT_GT(evaluate_bound(kind, {n, x + 1e-2}), evaluate_bound(kind, {n, x}))
            << to_string(kind) << " " << n << " " << x;
      }
    }
  }
}

TEST(BoundProperties, HSymmetry) {
  test::ParameterSource source(0.0, 60.0);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = source.uniform(-2.0, 3.0);
    const double beta = source.uniform(-2.0, 3.0);
    const double n = std::max(alpha, beta) + std::exp(source.uniform(-5.0, 5.0));
    const double x = source.argument();
    EXPECT_LT(rel_diff(h_alpha_beta({n, x}, alpha, beta), h_alpha_beta({n, -x}, beta, alpha)),
              1e-12);
  }
}

TEST(BoundProperties, WLowerBoundsBelowEnclosedW) {
  for (const auto& s : oracle::kRatios) {
    const Parameters p{s.n, s.x};
    const Enclosure a = cf_enclosure(p);
    const Enclosure b = cf_enclosure({s.n + 1.0, s.x});
    const double c = s.n + 0.5;
    const double lo = c * a.lo / b.hi;
    const double hi = c * a.hi / b.lo;
    EXPECT_LE(lo, s.w * (1.0 + 1e-15)) << s.n << " " << s.x;
    EXPECT_GE(hi, s.w * (1.0 - 1e-15)) << s.n << " " << s.x;
    EXPECT_LT(w_lower_trig(p), lo) << s.n << " " << s.x;
    EXPECT_LT(w_lower_algebraic(p), lo) << s.n << " " << s.x;
  }
}

}  // namespace
}  // namespace pcf
