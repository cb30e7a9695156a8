#include "admlab/rational.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace admlab {
namespace {

TEST(RationalTest, ParsesAndReduces) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("0/5"), Rational(0));
  EXPECT_EQ(Rational::parse("+3/9").to_string(), "1/3");
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, Formats) {
  EXPECT_EQ(Rational(4).to_string(), "4");
  EXPECT_EQ(Rational(4).to_fraction_string(), "4/1");
  EXPECT_EQ(Rational(-1, 3).to_fraction_string(), "-1/3");
  EXPECT_EQ(Rational(2, -4).to_string(), "-1/2");
}

TEST(RationalTest, Arithmetic) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_EQ(-a, Rational(-1, 3));
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(RationalTest, Power) {
  EXPECT_EQ(Rational::power(Rational(3), -16), Rational(1, 43046721));
  EXPECT_EQ(Rational::power(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(Rational::power(Rational(5), 0), Rational(1));
}

TEST(RationalTest, HashAgreesWithEquality) {
  std::hash<Rational> h;
  EXPECT_EQ(h(Rational(2, 4)), h(Rational(1, 2)));
}

}  // namespace
}  // namespace admlab
