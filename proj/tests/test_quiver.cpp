#include <gtest/gtest.h>

#include "nakajima/quiver.hpp"

using namespace nakajima;

namespace {
CycScalar q(long v) { return CycScalar(1, v); }
}  // namespace

TEST(Quiver, RankOneSingleton) {
  QuiverData d = generate_cm(1, q(3));
  EXPECT_TRUE(d.full_B1().is_zero());
  EXPECT_TRUE(d.full_B2().is_zero());
  EXPECT_EQ(d.full_I()(0, 0), q(1));
  EXPECT_EQ(d.full_J()(0, 0), q(3));
  EXPECT_TRUE(moment_defect(d).is_zero());
  EXPECT_TRUE(is_stable(d).stable);
}

TEST(Quiver, CalogeroMoser) {
  for (int n = 2; n <= 4; ++n) {
    QuiverData d = generate_cm(n, q(1));
    EXPECT_TRUE(is_admissible(d)) << n;
    EXPECT_TRUE(is_stable(d).stable) << n;
    EXPECT_EQ(stabilizer_dimension(d), 0);
  }
  Poly p = b1_characteristic_polynomial(generate_cm(2, q(1)));
  EXPECT_EQ(p, Poly::x() * (Poly::x() - Poly::constant(q(1))));
}

TEST(Quiver, ZeroData) {
  QuiverData z = zero_quiver(GroupAlgElem::scalar(1, q(2)), {2}, {1});
  EXPECT_EQ(moment_defect(z), z.tau_on_V() * q(-1));
  StabilityResult s = is_stable(z);
  EXPECT_FALSE(s.stable);
  EXPECT_EQ(s.closure.dim(), 0u);
}

TEST(Quiver, EmptyV) {
  QuiverData d = zero_quiver(GroupAlgElem::one(2), {0, 0}, {1, 0});
  EXPECT_TRUE(is_admissible(d));
  EXPECT_TRUE(is_stable(d).stable);
  auto res = generate_cyclic({0, 0}, {1, 0}, GroupAlgElem::one(2), 3, 5);
  ASSERT_TRUE(res.data.has_value());
  EXPECT_EQ(res.data->n(), 0);
}

TEST(Quiver, Gauge) {
  QuiverData d = generate_cm(2, q(1));
  QuiverData same = gauge_apply({Matrix::identity(2)}, d);
  EXPECT_EQ(same.full_B2(), d.full_B2());
  EXPECT_EQ(same.full_J(), d.full_J());
  QuiverData scaled = gauge_apply({Matrix::identity(2) * q(3)}, d);
  EXPECT_EQ(scaled.full_B1(), d.full_B1());
  EXPECT_EQ(scaled.full_I(), d.full_I() * q(3));
  EXPECT_EQ(scaled.full_J(), d.full_J() * CycScalar(1, Rational(1, 3)));
  EXPECT_EQ(moment_defect(scaled), moment_defect(d));
  Matrix g(2, 2);
  g(0, 0) = q(1), g(0, 1) = q(2), g(1, 0) = q(-1), g(1, 1) = q(1);
  QuiverData moved = gauge_apply({g}, d);
  EXPECT_TRUE(is_admissible(moved));
  EXPECT_TRUE(is_stable(moved).stable);
  EXPECT_EQ(fingerprints(moved), fingerprints(d));
}

TEST(Quiver, CyclicGenerator) {
  GroupAlgElem tau = GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 1L)});
  auto res = generate_cyclic({1, 1}, {1, 0}, tau, 1, 100);
  ASSERT_TRUE(res.data.has_value()) << res.failure;
  EXPECT_TRUE(is_admissible(*res.data));
  EXPECT_TRUE(is_stable(*res.data).stable);
  auto again = generate_cyclic({1, 1}, {1, 0}, tau, 1, 100);
  EXPECT_EQ(again.data->full_B1(), res.data->full_B1());
  EXPECT_EQ(again.data->full_J(), res.data->full_J());
}

TEST(Quiver, ValidateShapes) {
  QuiverData d = generate_cm(2, q(1));
  d.I[0] = Matrix(3, 1);
  EXPECT_THROW(d.validate(), std::invalid_argument);
}
