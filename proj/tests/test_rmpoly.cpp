#include <gtest/gtest.h>

#include "knotpoly/rmpoly.hpp"
#include "test_util.hpp"

namespace knotpoly {
namespace {

using testing::mono;
using testing::poly;

// P_2 and P_{-2} as printed, typed in term by term.
LaurentPoly printed_p2() {
  return poly({
      {{0, 4, 3}, "-1"},
      {{0, 6, 2}, "-2"}, {{0, 4, 2}, "1"}, {{0, 2, 2}, "-2"},
      {{0, 8, 1}, "-1"}, {{0, 6, 1}, "1"}, {{0, 4, 1}, "-2"}, {{0, 2, 1}, "1"}, {{0, 0, 1}, "-1"},
      {{0, 4, 0}, "1"},
  });
}

LaurentPoly printed_pm2() {
  return poly({{{0, 2, 2}, "1"}, {{0, 4, 1}, "1"}, {{0, 2, 1}, "-1"}, {{0, 0, 1}, "1"},
               {{0, 2, 0}, "1"}});
}

TEST(BinomTest, Examples) {
  EXPECT_EQ(binom_z(3, 1), 3);
  EXPECT_EQ(binom_z(0, 0), 1);
  EXPECT_EQ(binom_z(2, 5), 0);
  EXPECT_EQ(binom_z(-1, 0), 0);
  EXPECT_EQ(binom_z(4, -1), 0);
  EXPECT_EQ(binom_z(10, 5), 252);
}

TEST(BinomTest, LargeArgumentsStayExact) {
  EXPECT_EQ(binom_z(100, 50), mpz_class("100891344545564193334812497256", 10));
  mpz_class reference;
  mpz_bin_uiui(reference.get_mpz_t(), 300, 123);
  EXPECT_EQ(binom_z(300, 123), reference);
}

TEST(BinomTest, PascalRuleOnIntegerGrid) {
  for (std::int64_t a = -20; a <= 20; ++a) {
    for (std::int64_t b = -20; b <= 20; ++b) {
      if (a == 0 && b == 0) continue;
      EXPECT_EQ(binom_z(a, b), binom_z(a - 1, b - 1) + binom_z(a - 1, b)) << a << "," << b;
    }
  }
}

TEST(FloorDivTest, RoundsTowardNegativeInfinity) {
  EXPECT_EQ(floor_div(-1, 2), -1);
  EXPECT_EQ(floor_div(-2, 2), -1);
  EXPECT_EQ(floor_div(-3, 2), -2);
  EXPECT_EQ(floor_div(0, 2), 0);
  EXPECT_EQ(floor_div(5, 2), 2);
}

TEST(QPolyTest, MatchesPrintedQ) {
  const LaurentPoly expected = poly({
      {{0, 4, 3}, "-1"},
      {{0, 6, 2}, "-2"}, {{0, 4, 2}, "2"}, {{0, 2, 2}, "-2"},
      {{0, 8, 1}, "-1"}, {{0, 6, 1}, "2"}, {{0, 4, 1}, "-3"}, {{0, 2, 1}, "2"}, {{0, 0, 1}, "-1"},
      {{0, 4, 0}, "2"},
  });
  EXPECT_EQ(q_poly(), expected);
  EXPECT_EQ(q_poly().size(), 10u);
}

TEST(QPolyTest, RewriteIdentity) {
  const LaurentPoly rewrite =
      mono(0, 4, 0) * (mono(0, 0, 1, -1) * pow(rm_base(), 2) + LaurentPoly(2));
  EXPECT_TRUE((q_poly() - rewrite).is_zero());
}

TEST(QPolyTest, EvaluatesToTwoAtOrigin) {
  EXPECT_NEAR(std::abs(eval_numeric(q_poly(), {{Var::X, 0.0}, {Var::M, 1.0}}) - 2.0), 0.0, 0.0);
}

TEST(RmTest, InitialValues) {
  EXPECT_EQ(rm_recursive(0).poly, LaurentPoly(1));
  EXPECT_EQ(rm_recursive(1).poly, printed_p2());
  EXPECT_EQ(rm_recursive(-1).poly, printed_pm2());
  EXPECT_EQ(rm_closed(0).poly, LaurentPoly(1));
  EXPECT_EQ(rm_closed(1).poly, printed_p2());
  EXPECT_EQ(rm_closed(-1).poly, printed_pm2());
  EXPECT_EQ(rm_closed(3).path, RmPath::Closed);
  EXPECT_EQ(rm_recursive(3).path, RmPath::Recursive);
}

TEST(RmTest, OneRecursionStep) {
  // P_4 = Q P_2 - M^8, expanded by the independent oracle script
  const LaurentPoly p4 = poly({
      {{0, 0, 2}, "1"},   {{0, 2, 2}, "-3"},  {{0, 2, 3}, "4"},   {{0, 4, 1}, "-3"},
      {{0, 4, 2}, "7"},   {{0, 4, 3}, "-9"},  {{0, 4, 4}, "6"},   {{0, 6, 1}, "4"},
      {{0, 6, 2}, "-16"}, {{0, 6, 3}, "18"},  {{0, 6, 4}, "-9"},  {{0, 6, 5}, "4"},
      {{0, 8, 0}, "1"},   {{0, 8, 1}, "-7"},  {{0, 8, 2}, "16"},  {{0, 8, 3}, "-22"},
      {{0, 8, 4}, "15"},  {{0, 8, 5}, "-3"},  {{0, 8, 6}, "1"},   {{0, 10, 1}, "4"},
      {{0, 10, 2}, "-16"}, {{0, 10, 3}, "18"}, {{0, 10, 4}, "-9"}, {{0, 10, 5}, "4"},
      {{0, 12, 1}, "-3"}, {{0, 12, 2}, "7"},  {{0, 12, 3}, "-9"}, {{0, 12, 4}, "6"},
      {{0, 14, 2}, "-3"}, {{0, 14, 3}, "4"},  {{0, 16, 2}, "1"},
  });
  EXPECT_EQ(q_poly() * printed_p2() - mono(0, 8, 0), p4);
  EXPECT_EQ(rm_recursive(2).poly, p4);
  EXPECT_EQ(rm_closed(2).poly, p4);
}

TEST(RmTest, ClosedEqualsRecursive) {
  for (std::int64_t n = -10; n <= 10; ++n) {
    EXPECT_EQ(rm_closed(n).poly, rm_recursive(n).poly) << "n = " << n;
  }
}

TEST(RmTest, NoLongitudeVariable) {
  for (std::int64_t n = -5; n <= 5; ++n) {
    const LaurentPoly p = rm_closed(n).poly;
    EXPECT_EQ(p.degree(Var::L), 0);
    EXPECT_EQ(p.min_exponent(Var::L), 0);
    EXPECT_GE(p.min_exponent(Var::X), 0);
  }
}

TEST(RmTest, DegreeLawAndMonomialLeadingCoefficient) {
  EXPECT_TRUE(rm_closed(0).poly.is_constant());
  for (std::int64_t n = -10; n <= 10; ++n) {
    if (n == 0) continue;
    const LaurentPoly p = rm_closed(n).poly;
    const std::int64_t expected = n > 0 ? 3 * n : -3 * n - 1;
    EXPECT_EQ(p.degree(Var::X), expected) << "n = " << n;
    EXPECT_EQ(rm_x_degree(n), expected);
    const LaurentPoly lead = coeff_extract(p, Var::X, expected);
    ASSERT_EQ(lead.size(), 1u) << "n = " << n;
    EXPECT_EQ(abs(lead.terms().front().coeff), 1);
  }
  EXPECT_EQ(coeff_extract(rm_closed(1).poly, Var::X, 3), mono(0, 4, 0, -1));
}

}  // namespace
}  // namespace knotpoly
