#include <gtest/gtest.h>

#include "nakajima/cyclotomic.hpp"

using namespace nakajima;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_EQ(rational_to_string(Rational(5)), "5/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Cyclotomic, EulerPhiAndPolynomials) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(4), 2);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
}

TEST(Cyclotomic, CoefficientLengthIsPhi) {
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(CycScalar(m, 3L).degree(), euler_phi(m));
}

TEST(Cyclotomic, ZetaPowers) {
  for (int m = 1; m <= 6; ++m) {
    EXPECT_TRUE(CycScalar::zeta_power(m, m).is_one());
    EXPECT_EQ(CycScalar::zeta_power(m, 2) * CycScalar::zeta_power(m, m - 1), CycScalar::zeta_power(m, 1));
    CycScalar sum(m);
    for (int k = 0; k < m; ++k) sum += CycScalar::zeta_power(m, k);
    if (m > 1) EXPECT_TRUE(sum.is_zero()) << m;
  }
  // zeta_4^2 = -1
  EXPECT_EQ(CycScalar::zeta_power(4, 2), CycScalar(4, -1L));
}

TEST(Cyclotomic, Inverse) {
  CycScalar a = CycScalar(5, 2L) + CycScalar::zeta_power(5, 3);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_THROW(CycScalar(5).inverse(), std::domain_error);
}

TEST(Cyclotomic, FieldEmbedding) {
  // zeta_2 = -1 seen inside Q(zeta_4).
  CycScalar z2 = CycScalar::zeta_power(2, 1);
  EXPECT_EQ(z2.with_m(4), CycScalar(4, -1L));
  EXPECT_EQ(CycScalar::zeta_power(3, 1).with_m(6), CycScalar::zeta_power(6, 2));
  EXPECT_EQ(CycScalar(3, 2L) + CycScalar(1, 1L), CycScalar(3, 3L));
}
