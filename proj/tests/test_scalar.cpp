#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sombor/indices.hpp"
#include "sombor/scalar.hpp"
#include "support/oracles.hpp"

using namespace sombor;

namespace {

Scalar oracle_value(const std::string& digits, int sig_digits_known) {
  // Midpoint as printed, radius one unit in the last quoted digit.
  double magnitude = std::abs(std::stod(digits));
  double radius = std::pow(10.0, std::floor(std::log10(magnitude)) - (sig_digits_known - 1));
  return Scalar::from_string(digits, radius, 60);
}

int significant_digits(const std::string& s) {
  int count = 0;
  bool started = false;
  for (char c : s) {
    if (c < '0' || c > '9') continue;
    if (c != '0') started = true;
    if (started) ++count;
  }
  return count;
}

}  // namespace

TEST(Scalar, IntegersAreExact) {
  auto x = Scalar::integer(12);
  EXPECT_TRUE(x.is_exact());
  EXPECT_EQ(x.midpoint_string(3), "1.20e+01");
  EXPECT_TRUE(x.certainly_positive());
  EXPECT_TRUE((-x).certainly_negative());
  EXPECT_TRUE(Scalar::integer(0).contains_zero());
}

TEST(Scalar, RationalEnclosure) {
  auto third = Scalar::rational(1, 3);
  EXPECT_FALSE(third.is_exact());
  auto sum = third * 3 - Scalar::integer(1);
  EXPECT_TRUE(sum.contains_zero());
  EXPECT_LT(sum.rad_double(), 1e-50);
  EXPECT_LE(third.lower_double(), 1.0 / 3.0);
  EXPECT_GE(third.upper_double(), 1.0 / 3.0);
}

TEST(Scalar, KernelsEncloseOracleValues) {
  // e, e^sqrt(2) and friends against mpmath
  for (const auto& [ij, digits] : oracle::kF) {
    auto value = exp(sqrt(Scalar::integer(exponent_square(ij.first, ij.second), 50)));
    auto reference = oracle_value(digits, significant_digits(digits));
    EXPECT_TRUE(overlaps(value, reference)) << ij.first << "," << ij.second;
    EXPECT_LT(value.rad_double(), 1e-45 * value.mid_double());
  }
}

TEST(Scalar, SqrtOfEnclosureContainingZero) {
  auto tiny = Scalar::from_string("0", 1e-30, 30);
  auto r = sqrt(tiny);
  EXPECT_TRUE(r.contains_zero());
  EXPECT_GE(r.upper_double(), 1e-15 * 0.99);
}

TEST(Scalar, ComparisonsRequireSeparation) {
  auto a = Scalar::from_string("1", 1e-3, 30);
  auto b = Scalar::from_string("1.0015", 1e-3, 30);
  auto c = Scalar::from_string("1.01", 1e-3, 30);
  EXPECT_TRUE(overlaps(a, b));
  EXPECT_FALSE(certainly_less(a, b));
  EXPECT_TRUE(certainly_less(a, c));
  EXPECT_TRUE(certainly_greater(c, a));
  EXPECT_TRUE(contains(a.inflated(10), a));
  EXPECT_FALSE(contains(a, a.inflated(10)));
}

TEST(Scalar, AgreementDigits) {
  auto a = Scalar::from_string("1.000000000000000000001", 0, 40);
  auto b = Scalar::from_string("1", 0, 40);
  EXPECT_NEAR(agreement_digits(a, b), 21.0, 0.01);
  EXPECT_TRUE(std::isinf(agreement_digits(b, b)));
}

TEST(Scalar, StringsCarryConversionError) {
  auto x = exp(Scalar::integer(1, 50));
  EXPECT_EQ(x.midpoint_string(10), "2.718281828e+00");
  // printing to 10 digits loses about 1e-9, which the radius must cover
  EXPECT_GE(std::stod(x.radius_string(10)), 2e-9);
  EXPECT_LT(std::stod(x.radius_string(50)), 1e-47);
}

TEST(Scalar, CopyMoveAndPrecisionChange) {
  auto x = exp(Scalar::integer(2, 40));
  Scalar y = x;
  Scalar z = std::move(y);
  EXPECT_EQ(z.midpoint_string(40), x.midpoint_string(40));
  y = z;
  EXPECT_EQ(y.digits(), 40);
  auto wider = x.with_digits(80);
  EXPECT_EQ(wider.digits(), 80);
  EXPECT_TRUE(contains(wider, x));
}

TEST(Scalar, MixedPrecisionArithmeticUsesTheLarger) {
  auto a = Scalar::rational(1, 7, 20);
  auto b = Scalar::rational(1, 7, 90);
  auto s = a + b;
  EXPECT_GE(s.bits(), b.bits());
  EXPECT_TRUE(overlaps(s, Scalar::rational(2, 7, 90)));
}

TEST(Scalar, PrecisionDoublingNeverLosesTheValue) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> deg(1, 4);
  std::uniform_int_distribution<int> coeff(-40, 40);
  std::uniform_int_distribution<int> digits(15, 60);
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = digits(rng);
    Scalar low = Scalar::integer(0, p);
    Scalar high = Scalar::integer(0, 2 * p);
    double approx = 0;
    const int terms = 1 + trial % 6;
    for (int k = 0; k < terms; ++k) {
      const int i = deg(rng), j = deg(rng), c = coeff(rng);
      low += f(i, j, p) * c;
      high += f(i, j, 2 * p) * c;
      approx += c * f_double(i, j);
    }
    ASSERT_TRUE(overlaps(low, high)) << trial;
    ASSERT_LE(high.rad_double(), low.rad_double() + 1e-300);
    ASSERT_NEAR(low.mid_double(), approx, 1e-9 * (1 + std::abs(approx)));
    // the refined midpoint sits inside the coarse enclosure
    if (low.is_exact()) {
      ASSERT_TRUE(high.is_exact()) << trial;
    } else {
      ASSERT_TRUE(contains(low, Scalar::from_string(high.midpoint_string(2 * p), 0, 2 * p))) << trial;
    }
  }
}
