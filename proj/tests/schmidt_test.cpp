#include <gtest/gtest.h>

#include <cmath>

#include "coboson/schmidt.hpp"

namespace {

using coboson::Kind;
using coboson::SchmidtSpec;

TEST(SchmidtWeight, SeparableStateOccupiesModeZero) {
  const SchmidtSpec s(0.0, Kind::BiFermion);
  EXPECT_EQ(coboson::schmidt_weight(s, 0), 1.0);
  EXPECT_EQ(coboson::schmidt_weight(s, 1), 0.0);
  EXPECT_EQ(coboson::schmidt_weight(s, 7), 0.0);
}

TEST(SchmidtWeight, HalfAtThree) {
  EXPECT_DOUBLE_EQ(coboson::schmidt_weight(SchmidtSpec(0.5, Kind::BiBoson), 3), 0.0625);
}

TEST(SchmidtWeight, RejectsMaximalEntanglement) {
  EXPECT_THROW(coboson::schmidt_weight(SchmidtSpec(1.0, Kind::BiFermion), 0),
               coboson::domain_error);
}

TEST(SchmidtSpec, RejectsOutOfRange) {
  EXPECT_THROW(SchmidtSpec(-0.1, Kind::BiFermion), coboson::domain_error);
  EXPECT_THROW(SchmidtSpec(1.5, Kind::BiBoson), coboson::domain_error);
  EXPECT_THROW(SchmidtSpec(std::nan(""), Kind::BiBoson), coboson::domain_error);
}

TEST(SchmidtWeight, PartialSumsEqualOneMinusXToTheM) {
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.8, 0.95, 0.999}) {
    const SchmidtSpec s(x, Kind::BiFermion);
    double acc = 0.0;
    for (unsigned m = 0; m < 200; ++m) {
      acc += coboson::schmidt_weight(s, m);
      if (m % 20 == 19) {
        EXPECT_NEAR(acc, 1.0 - std::pow(x, m + 1), 1e-14) << "x=" << x << " M=" << m + 1;
      }
    }
  }
}

TEST(Purity, Values) {
  EXPECT_EQ(coboson::purity(SchmidtSpec(0.0, Kind::BiFermion)), 1.0);
  // sum (1-x)^2 x^{2m} over 64 terms
  double direct = 0.0;
  for (int m = 0; m < 64; ++m) direct += 0.25 * std::pow(0.25, m);
  EXPECT_NEAR(coboson::purity(SchmidtSpec(0.5, Kind::BiFermion)), direct, 1e-15);
  EXPECT_NEAR(direct, 1.0 / 3.0, 1e-15);
  EXPECT_THROW(coboson::purity(SchmidtSpec(1.0, Kind::BiFermion)), coboson::domain_error);
}

TEST(Purity, DecreasesTowardZero) {
  double prev = 2.0;
  for (double x = 0.0; x < 1.0; x += 0.01) {
    const double p = coboson::purity(SchmidtSpec(x, Kind::BiBoson));
    EXPECT_LT(p, prev);
    prev = p;
  }
  EXPECT_LT(coboson::purity(SchmidtSpec(1.0 - 1e-9, Kind::BiBoson)), 1e-9);
}

TEST(SchmidtNumber, Values) {
  EXPECT_EQ(coboson::schmidt_number(SchmidtSpec(0.0, Kind::BiFermion)), 1.0);
  EXPECT_NEAR(coboson::schmidt_number(SchmidtSpec(1.0 / 3.0, Kind::BiFermion)), 2.0, 1e-15);
  EXPECT_THROW(coboson::schmidt_number(SchmidtSpec(1.0, Kind::BiFermion)), coboson::domain_error);
}

TEST(SchmidtNumber, TimesPurityIsOne) {
  for (int i = 0; i < 100; ++i) {
    const double x = 0.999 * i / 99.0;
    const SchmidtSpec s(x, Kind::BiFermion);
    EXPECT_NEAR(coboson::schmidt_number(s) * coboson::purity(s), 1.0, 1e-12) << x;
  }
}

TEST(TruncateWeights, CarriesTail) {
  const SchmidtSpec s(0.5, Kind::BiFermion);
  const auto tw = coboson::truncate_weights(s);
  EXPECT_LT(tw.truncation_tail, 1e-14);
  EXPECT_EQ(tw.truncation_tail, std::pow(0.5, static_cast<double>(tw.size())));
  double sum = 0.0;
  for (double w : tw.weights) sum += w;
  EXPECT_NEAR(sum + tw.truncation_tail, 1.0, 1e-15);
  for (std::size_t i = 1; i < tw.size(); ++i) EXPECT_LT(tw.weights[i], tw.weights[i - 1]);
}

TEST(TruncateWeights, SeparableIsSingleWeight) {
  const auto tw = coboson::truncate_weights(SchmidtSpec(0.0, Kind::BiBoson));
  ASSERT_EQ(tw.size(), 1u);
  EXPECT_EQ(tw.weights[0], 1.0);
  EXPECT_EQ(tw.truncation_tail, 0.0);
}

}  // namespace
