#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "coboson/analytic.hpp"
#include "coboson/trap.hpp"

namespace {

using coboson::Kind;
using coboson::SchmidtSpec;

long double direct_bose(unsigned l, long double gamma) {
  long double acc = 0.0L;
  for (unsigned long p = 200000; p >= 1; --p)
    acc += std::exp(-gamma * p) / std::pow(static_cast<long double>(p), static_cast<long double>(l));
  return acc;
}

TEST(RiemannZeta, KnownValues) {
  EXPECT_NEAR(coboson::riemann_zeta(2.0), std::numbers::pi * std::numbers::pi / 6.0, 1e-10);
  EXPECT_NEAR(coboson::riemann_zeta(3.0), 1.2020569031595942, 1e-10);
  EXPECT_NEAR(coboson::riemann_zeta(4.0), std::pow(std::numbers::pi, 4) / 90.0, 1e-10);
  EXPECT_NEAR(coboson::riemann_zeta(3.0), 1.202, 1e-3);
}

TEST(RiemannZeta, ThreeHalvesIndependentTruncations) {
  const double a = coboson::riemann_zeta(1.5, 200);
  const double b = coboson::riemann_zeta(1.5, 20000);
  EXPECT_NEAR(a, b, 1e-9);
  EXPECT_NEAR(b, 2.612375348685488, 1e-10);
}

TEST(RiemannZeta, RejectsDivergentOrders) {
  EXPECT_THROW(coboson::riemann_zeta(1.0), coboson::domain_error);
  EXPECT_THROW(coboson::riemann_zeta(0.5), coboson::domain_error);
}

TEST(BoseIntegral, ZeroGammaIsZeta) {
  for (unsigned l : {2u, 3u, 5u})
    EXPECT_EQ(coboson::bose_integral(l, 0.0), coboson::riemann_zeta(static_cast<double>(l)));
  EXPECT_THROW(coboson::bose_integral(1, 0.0), coboson::domain_error);
  EXPECT_THROW(coboson::bose_integral(2, -0.1), coboson::domain_error);
  EXPECT_THROW(coboson::bose_integral(0, 1.0), coboson::domain_error);
}

TEST(BoseIntegral, FirstOrderClosedForm) {
  for (double g : {0.1, 1.0, 5.0, 1e-3, 0.7}) {
    const double closed = -std::log(-std::expm1(-g));
    EXPECT_NEAR(coboson::bose_integral(1, g), closed, 1e-10 * std::max(1.0, closed)) << g;
  }
}

TEST(BoseIntegral, LargeGammaFirstTerm) {
  EXPECT_NEAR(coboson::bose_integral(3, 10.0) / std::exp(-10.0), 1.0, 1e-4);
}

TEST(BoseIntegral, MatchesDirectSumAcrossBranches) {
  for (unsigned l : {1u, 2u, 3u}) {
    for (double g : {0.01, 0.2, 0.6, 0.95, 0.999, 1.0, 1.001, 1.3, 3.0}) {
      const double ref = static_cast<double>(direct_bose(l, g));
      EXPECT_NEAR(coboson::bose_integral(l, g), ref, 1e-12 * ref) << "l=" << l << " g=" << g;
    }
  }
}

TEST(BoseIntegral, DecreasingInGammaIncreasingInInverseOrder) {
  for (unsigned l : {1u, 2u, 3u}) {
    double prev = INFINITY;
    for (double g = 0.01; g < 6.0; g *= 1.3) {
      const double v = coboson::bose_integral(l, g);
      EXPECT_LT(v, prev) << l << " " << g;
      prev = v;
      if (l < 3) {
        EXPECT_GT(v, coboson::bose_integral(l + 1, g));
      }
    }
  }
}

TEST(BoseIntegral, DerivativeMatchesFiniteDifference) {
  for (double g : {0.5, 1.0, 2.0}) {
    const double h = 1e-5;
    const double fd =
        (coboson::bose_integral(1, g + h) - coboson::bose_integral(1, g - h)) / (2.0 * h);
    EXPECT_NEAR(coboson::bose_integral1_derivative(g), fd, 1e-6);
  }
  EXPECT_THROW(coboson::bose_integral1_derivative(0.0), coboson::domain_error);
}

TEST(DeltaExpansion, ValidityFlag) {
  EXPECT_TRUE(coboson::DeltaExpansion::from_delta(0.0).valid);
  EXPECT_TRUE(coboson::DeltaExpansion::from_delta(0.049).valid);
  EXPECT_FALSE(coboson::DeltaExpansion::from_delta(0.05).valid);
  EXPECT_THROW(coboson::DeltaExpansion::from_delta(1.0), coboson::domain_error);
  EXPECT_THROW(coboson::DeltaExpansion::from_delta(-0.1), coboson::domain_error);
}

TEST(OccupationDelta, ZeroDeltaIsBoseEinstein) {
  for (double e : {0.01, 1.0, 7.0}) EXPECT_DOUBLE_EQ(coboson::occupation_delta(0.0, e), 1.0 / std::expm1(e));
}

TEST(OccupationDelta, EqualsSeriesWithLinearizedRatio) {
  // (1 - z) sum z^n [1 + (n-1)(1 - n delta)]
  for (double delta : {0.001, 0.01, 0.03}) {
    for (double e : {0.3, 1.0, 2.5}) {
      long double acc = 0.0L;
      for (int n = 0; n < 4000; ++n) {
        const long double nd = n;
        acc += std::exp(-e * nd) * (1.0L + (nd - 1.0L) * (1.0L - nd * delta));
      }
      acc *= -std::expm1(-e);
      EXPECT_NEAR(coboson::occupation_delta(delta, e), static_cast<double>(acc), 1e-13);
    }
  }
}

TEST(OccupationDelta, LargeOffsetLeadingOrder) {
  // Both terms are O(e^{-e}); the delta pieces cancel at leading order.
  const double delta = 0.01, e = 30.0;
  EXPECT_NEAR(coboson::occupation_delta(delta, e) / std::exp(-e), 1.0, 1e-10);
}

TEST(OccupationDelta, ExactFermionShiftIsHalfTheExpansion) {
  // x^n (n+1)(1-x)/(1-x^{n+1}) = 1 - n delta/2 + O(delta^2): the exact
  // first-order shift is half of the one from chi_{n+1}/chi_n ~ x^n.
  for (double delta : {1e-3, 1e-2}) {
    for (double e : {0.5, 1.0, 3.0}) {
      const double be = 1.0 / std::expm1(e);
      const double half = be + 0.5 * (coboson::occupation_delta(delta, e) - be);
      const double exact = coboson::level_occupation(SchmidtSpec(1.0 - delta, Kind::BiFermion), e);
      EXPECT_NEAR(exact, half, 10.0 * delta * delta) << delta << " " << e;
    }
  }
}

TEST(FractionThermoLimit, Values) {
  const double z3 = coboson::riemann_zeta(3.0);
  const double z2 = coboson::riemann_zeta(2.0);
  const auto ideal = coboson::fraction_thermo_limit(0.0, 0.5);
  EXPECT_NEAR(ideal.value, 0.8497, 1e-4);
  EXPECT_EQ(ideal.value, 1.0 - 0.125 * z3);
  const auto at_one = coboson::fraction_thermo_limit(0.0, 1.0);
  EXPECT_TRUE(at_one.clamped);
  EXPECT_EQ(at_one.value, 0.0);
  EXPECT_NEAR(at_one.raw, 1.0 - z3, 1e-15);
  const auto shifted = coboson::fraction_thermo_limit(0.01, 0.5);
  EXPECT_NEAR(ideal.value - shifted.value, 0.02 * (z3 + z2) * 0.125, 1e-15);
  EXPECT_EQ(coboson::fraction_thermo_limit(0.3, 0.0).value, 1.0);
}

TEST(NumberDecomposition, ZeroDeltaHasNoSecondPart) {
  const auto d = coboson::total_number_decomposition(0.0, 0.5, 100, 0.01);
  EXPECT_EQ(d.total_integral, d.part1);
  EXPECT_EQ(d.total_summed, d.part1);
  EXPECT_NEAR(d.gamma, 0.01 + 1.0 / (0.5 * std::cbrt(100.0)), 1e-15);
  EXPECT_NEAR(d.ground1, 1.0 / std::expm1(0.01), 1e-12);
}

TEST(NumberDecomposition, LargeNAccumulationPoint) {
  const unsigned long n = 1'000'000'000;
  const double t = 0.5;
  const auto d = coboson::total_number_decomposition(0.0, t, n, 1e-9);
  const double approx = d.ground1 + static_cast<double>(n) * t * t * t * coboson::riemann_zeta(3.0);
  EXPECT_NEAR(d.part1 / approx, 1.0, 2e-3);
}

TEST(NumberDecomposition, TracksIdealShellSumAsNGrows) {
  // Replacing shell sums by Bose integrals costs O(N^{-2/3}) relative accuracy.
  double prev = 1.0;
  for (unsigned long n : {100ul, 1000ul, 10000ul}) {
    const double alpha = 1.0 / static_cast<double>(n);
    const auto d = coboson::total_number_decomposition(0.0, 0.5, n, alpha);
    const double shells =
        coboson::total_number(coboson::TrapEnsemble(n, SchmidtSpec(1.0, Kind::BiBoson), 0.5, alpha))
            .value;
    const double rel = std::abs(d.total_summed / shells - 1.0);
    EXPECT_LT(rel, 0.025) << n;
    EXPECT_LT(rel, prev);
    prev = rel;
  }
}

TEST(NumberDecomposition, SummedSecondPartMatchesDirectShellSum) {
  const double t = 0.5, alpha = 0.01;
  const unsigned long n = 100;
  const double w = 1.0 / (t * std::cbrt(100.0));
  long double ref = std::exp(alpha) / (std::expm1(alpha) * std::expm1(alpha));
  for (unsigned long p = 1; p < 5000; ++p) {
    const long double y = alpha + p * w;
    const long double g = 0.5L * p * p + 1.5L * p + 1.0L;
    ref += g * std::exp(y) / (std::expm1(y) * std::expm1(y));
  }
  const auto d = coboson::total_number_decomposition(0.01, t, n, alpha);
  EXPECT_NEAR(d.part2_summed, static_cast<double>(ref), 1e-10 * ref);
  EXPECT_EQ(d.part2_residual(), d.part2_integral - d.part2_summed);
  EXPECT_NE(d.part2_residual(), 0.0);
}

TEST(NumberDecomposition, RejectsBadInputs) {
  EXPECT_THROW(coboson::total_number_decomposition(0.0, 0.5, 100, 0.0), coboson::domain_error);
  EXPECT_THROW(coboson::total_number_decomposition(0.0, 0.0, 100, 0.1), coboson::domain_error);
}

}  // namespace
