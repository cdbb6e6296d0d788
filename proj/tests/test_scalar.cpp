#include <gtest/gtest.h>

#include "superform/scalar.hpp"

using namespace superform;

namespace {

Exact z(long a, long b = 0) { return Exact(Rational(a), Rational(b)); }

}  // namespace

TEST(Exact, GaussianArithmetic) {
  EXPECT_EQ(z(1, 1) * z(1, -1), z(2));
  EXPECT_EQ(Exact::i() * Exact::i(), z(-1));
  EXPECT_EQ(z(3, 4) / z(1, 2), Exact(Rational(11, 5), Rational(-2, 5)));
  EXPECT_EQ(z(3, 4).norm(), Rational(25));
  EXPECT_THROW(z(1) / z(0), std::domain_error);
}

TEST(Exact, TextRoundTrip) {
  for (const char* s : {"0", "1", "-1", "i", "-i", "1+i", "1/2-3/4*i", "-7/3*i", "5/2"}) {
    EXPECT_EQ(to_string(parse_exact(s)), s) << s;
  }
  EXPECT_EQ(parse_exact(" 2/4 + 3i "), Exact(Rational(1, 2), Rational(3)));
  EXPECT_EQ(parse_exact("i+1"), z(1, 1));
}

TEST(Exact, ParseErrorsCarryColumns) {
  try {
    parse_exact("1/2*x");
    FAIL();
  } catch (const ScalarSyntaxError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(parse_exact(""), ScalarSyntaxError);
  EXPECT_THROW(parse_exact("1/0"), ScalarSyntaxError);
  EXPECT_THROW(parse_exact("1 2"), ScalarSyntaxError);
  EXPECT_THROW(parse_exact("i+i"), ScalarSyntaxError);
}

TEST(Exact, HalfPlane) {
  EXPECT_TRUE(in_c_plus(z(1, -5)));
  EXPECT_TRUE(in_c_plus(z(0, 1)));
  EXPECT_FALSE(in_c_plus(z(0, -1)));
  EXPECT_FALSE(in_c_plus(z(-1, 5)));
  EXPECT_FALSE(in_c_plus(z(0)));
}

TEST(Exact, SquareRootsInHalfPlane) {
  EXPECT_EQ(sqrt_cplus(z(4)), z(2));
  EXPECT_EQ(sqrt_cplus(z(-1)), Exact::i());
  EXPECT_EQ(sqrt_cplus(z(0, 2)), z(1, 1));
  EXPECT_EQ(sqrt_cplus(z(0, -2)), z(1, -1));
  EXPECT_EQ(sqrt_cplus(Exact(Rational(9, 4))), Exact(Rational(3, 2)));
  EXPECT_THROW(sqrt_cplus(z(2)), IrrationalRootError);
  EXPECT_THROW(sqrt_cplus(z(0)), std::domain_error);
  // Oracle: r^2 == s and r in C+, for every Gaussian integer square.
  for (long a = -4; a <= 4; ++a) {
    for (long b = -4; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      Exact s = z(a, b) * z(a, b);
      Exact r = sqrt_cplus(s);
      EXPECT_EQ(r * r, s);
      EXPECT_TRUE(in_c_plus(r));
    }
  }
}

TEST(Approx, ToleranceEquality) {
  Approx one(1);
  Approx near(Real(1) + Real("1e-35"), Real(0));
  Approx far(Real(1) + Real("1e-20"), Real(0));
  EXPECT_TRUE(approx_eq(one, near));
  EXPECT_FALSE(approx_eq(one, far));
  Approx big(Real("1e10"), Real(0));
  Approx big_near(Real("1e10") + Real("1e-25"), Real(0));
  EXPECT_TRUE(approx_eq(big, big_near));
}

TEST(Approx, SquareRoot) {
  Approx two = exact_to_approx(z(2));
  Approx r = sqrt_cplus(two);
  EXPECT_TRUE(approx_eq(r * r, two));
  EXPECT_TRUE(in_c_plus(r));
  Approx m = sqrt_cplus(exact_to_approx(z(-3)));
  EXPECT_TRUE(m.re() == 0 && m.im() > 0);
  EXPECT_TRUE(approx_eq(m * m, exact_to_approx(z(-3))));
}
