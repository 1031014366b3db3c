#include <gtest/gtest.h>

#include "nakajima/quadric.hpp"

using namespace nakajima;

TEST(Quadric, Relations) {
  auto ctx = make_tau(GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 4L)}));
  QElem x = QElem::x(ctx), y = QElem::y(ctx), z = QElem::z(ctx), w = QElem::w(ctx);
  EXPECT_EQ(y * x, x * y + QElem::monomial(ctx, {0, 1, 0, 1}, ctx->tau()));
  EXPECT_EQ(z * w, w * z);
  EXPECT_EQ(x * z, z * x);
  EXPECT_EQ(y * w, w * y);
  EXPECT_EQ((y * x) * x, y * (x * x));
}

TEST(Quadric, Dimensions) {
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(q_dim(0, 0, m), m);
    EXPECT_EQ(q_dim(2, 3, m), 12 * m);
    EXPECT_EQ(q_dim(1, 0, m), 2 * m);
    auto ctx = make_tau(GroupAlgElem::one(m));
    EXPECT_EQ(q_dim_by_generation(ctx, 2, 2), 9 * m);
  }
  EXPECT_THROW(q_dim(-1, 0, 1), std::invalid_argument);
}

TEST(Quadric, StrongGeneration) {
  auto ctx = make_tau(GroupAlgElem::from_charvals({CycScalar(3, 1L), CycScalar(3, 2L), CycScalar(3, 5L)}));
  EXPECT_TRUE(strong_generation_check(ctx, 2, 1, 0));
  EXPECT_TRUE(strong_generation_check(ctx, 1, 2, 1));
}

TEST(Quadric, SpecializeToB) {
  auto ctx = make_tau(GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 4L)}));
  EXPECT_EQ(specialize_to_B(QElem::x(ctx) * QElem::z(ctx)), BElem::x(ctx));
  QElem rel = QElem::monomial(ctx, {0, 1, 0, 1}, ctx->tau());
  EXPECT_EQ(specialize_to_B(rel), BElem::monomial(ctx, 0, 0, ctx->tau()));
  QElem u = QElem::y(ctx) * QElem::w(ctx), v = QElem::x(ctx) * QElem::x(ctx) * QElem::group(ctx, 1);
  EXPECT_EQ(specialize_to_B(u * v), specialize_to_B(u) * specialize_to_B(v));
}

TEST(Quadric, CohomologyExamples) {
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(coh_dim(0, 1, 1, m).dim, 4 * m);
    EXPECT_EQ(coh_dim(2, -2, -2, m).dim, m);
    EXPECT_EQ(coh_dim(1, 0, -2, m).dim, m);
    for (int p = 0; p <= 2; ++p)
      for (int j = -4; j <= 4; ++j) EXPECT_EQ(coh_dim(p, -1, j, m).dim, 0);
    EXPECT_EQ(euler_characteristic(-3, 2, m), -2 * 3 * m);
  }
  EXPECT_EQ(coh_dim(0, 1, 1, 1).dim, 4);
}

TEST(Quadric, CohomologyCharacters) {
  CohEntry e = coh_dim(0, 1, 0, 3);
  long sum = 0;
  for (long c : e.characters) sum += c;
  EXPECT_EQ(sum, e.dim);
  EXPECT_EQ(e.characters.size(), 3u);
}
