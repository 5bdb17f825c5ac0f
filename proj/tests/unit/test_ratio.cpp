#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "ocelkit/ratio.hpp"

using ocelkit::Ratio;
using boost::multiprecision::cpp_rational;

namespace {

// cpp_rational converts a finite double exactly.
bool oracle_at_least(const Ratio& x, double r) {
  if (x.den == 0) return r <= 0.0;
  return cpp_rational(x.num) / cpp_rational(x.den) >= cpp_rational(r);
}

}  // namespace

TEST(Ratio, BoundaryAtOneQuarter) {
  const Ratio quarter{6, 24};
  EXPECT_TRUE(quarter.at_least(0.25));
  EXPECT_FALSE(quarter.at_least(0.2500001));
  EXPECT_FALSE(quarter.at_least(std::nextafter(0.25, 1.0)));
  EXPECT_TRUE(quarter.at_least(std::nextafter(0.25, 0.0)));
}

TEST(Ratio, DecimalThresholdsAreTheirBinaryValue) {
  // 0.1 as a double is slightly above 1/10, 0.3 slightly below 3/10.
  EXPECT_FALSE((Ratio{1, 10}).at_least(0.1));
  EXPECT_TRUE((Ratio{3, 10}).at_least(0.3));
  EXPECT_EQ((Ratio{1, 10}).at_least(0.1), oracle_at_least({1, 10}, 0.1));
  EXPECT_EQ((Ratio{3, 10}).at_least(0.3), oracle_at_least({3, 10}, 0.3));
}

TEST(Ratio, EdgeThresholds) {
  const Ratio x{3, 7};
  EXPECT_TRUE(x.at_least(0.0));
  EXPECT_TRUE(x.at_least(-1.0));
  EXPECT_FALSE(x.at_least(std::numeric_limits<double>::quiet_NaN()));
  EXPECT_FALSE(x.at_least(std::numeric_limits<double>::infinity()));
  EXPECT_TRUE((Ratio{0, 5}).at_least(0.0));
  EXPECT_FALSE((Ratio{0, 5}).at_least(std::numeric_limits<double>::denorm_min()));
  EXPECT_TRUE((Ratio{1, 1}).at_least(1.0));
  EXPECT_FALSE((Ratio{1, 1}).at_least(std::nextafter(1.0, 2.0)));
}

TEST(Ratio, HugeOperands) {
  const std::uint64_t big = std::numeric_limits<std::uint64_t>::max();
  for (const Ratio x : {Ratio{big, big}, Ratio{big - 1, big}, Ratio{1, big}, Ratio{big, 1}})
    for (double r : {1.0, 0.5, 1e-19, 1e19, 2e19, std::nextafter(1.0, 0.0)})
      EXPECT_EQ(x.at_least(r), oracle_at_least(x, r)) << x.num << "/" << x.den << " vs " << r;
}

TEST(Ratio, AgreesWithRationalOracleOnRandomInputs) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t den = 1 + rng() % 1000;
    const std::uint64_t num = rng() % (den + 1);
    Ratio x{num, den};
    // Thresholds near the ratio itself and arbitrary ones.
    const double exact = static_cast<double>(num) / static_cast<double>(den);
    for (double r : {exact, std::nextafter(exact, 0.0), std::nextafter(exact, 2.0),
                     std::ldexp(static_cast<double>(rng() >> 11), -53)})
      ASSERT_EQ(x.at_least(r), oracle_at_least(x, r)) << num << "/" << den << " vs " << r;
  }
}

TEST(Ratio, PercentFloor) {
  EXPECT_EQ((Ratio{16, 24}).percent_floor(), 66u);
  EXPECT_EQ((Ratio{2686, 4077}).percent_floor(), 65u);
  EXPECT_EQ((Ratio{1, 1}).percent_floor(), 100u);
  EXPECT_EQ((Ratio{0, 9}).percent_floor(), 0u);
  EXPECT_EQ((Ratio{199, 200}).percent_floor(), 99u);
}

TEST(Ratio, EqualityIsByValue) {
  EXPECT_EQ((Ratio{2, 4}), (Ratio{1, 2}));
  EXPECT_NE((Ratio{2, 5}), (Ratio{1, 2}));
}
