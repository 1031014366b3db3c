#include <gtest/gtest.h>

#include "nakajima/btau.hpp"

using namespace nakajima;

namespace {
GroupAlgElem cv(std::vector<long> v) {
  std::vector<CycScalar> c;
  for (long x : v) c.push_back(CycScalar(static_cast<int>(v.size()), x));
  return GroupAlgElem::from_charvals(c);
}
}  // namespace

TEST(BTau, DefiningRelation) {
  auto ctx = make_tau(cv({2, 5}));
  BElem x = BElem::x(ctx), y = BElem::y(ctx);
  EXPECT_EQ(y * x, x * y + BElem::monomial(ctx, 0, 0, ctx->tau()));
}

TEST(BTau, YSquaredX) {
  auto ctx = make_tau(cv({2, 5}));
  BElem x = BElem::x(ctx), y = BElem::y(ctx);
  BElem want = x * y * y + BElem::monomial(ctx, 0, 0, tau_window(ctx->tau(), 0, 1)) * y;
  EXPECT_EQ(y * y * x, want);
  EXPECT_EQ(b_multiply_by_rewriting(y * y, x), want);
}

TEST(BTau, GroupConjugation) {
  for (int m = 1; m <= 4; ++m) {
    auto ctx = make_tau(GroupAlgElem::one(m));
    BElem g = BElem::group(ctx, 1), gi = BElem::group(ctx, m - 1);
    EXPECT_EQ(g * BElem::x(ctx) * gi, BElem::x(ctx) * CycScalar::zeta_power(m, 1));
    EXPECT_EQ(g * BElem::y(ctx) * gi, BElem::y(ctx) * CycScalar::zeta_power(m, m - 1));
  }
}

TEST(BTau, Commutator) {
  auto c1 = make_tau(GroupAlgElem::scalar(1, CycScalar(1, 3L)));
  EXPECT_TRUE(commutator_y_pmu(c1, CycScalar(1, 0L)).equal);
  EXPECT_TRUE(commutator_y_pmu(c1, CycScalar(1, 5L)).equal);
  auto c2 = make_tau(cv({1, 3}));
  EXPECT_TRUE(commutator_y_pmu(c2, CycScalar(2, 0L)).equal);
  CommutatorCheck c = commutator_y_pmu(c2, CycScalar(2, 1L));
  EXPECT_TRUE(c.equal);
  // [y, x^2 - 1] = tau x + x tau
  BElem x = BElem::x(c2), t = BElem::monomial(c2, 0, 0, c2->tau());
  EXPECT_EQ(c.lhs, t * x + x * t);
}

TEST(BTau, YActionOnPolynomials) {
  auto c1 = make_tau(GroupAlgElem::one(1));
  EXPECT_TRUE(y_action_on_polynomials(BElem::scalar(c1, CycScalar(1, 1L))).is_zero());
  EXPECT_EQ(y_action_on_polynomials(BElem::x(c1)), BElem::scalar(c1, CycScalar(1, 1L)));
  auto c2 = make_tau(cv({1, 3}));
  BElem x2 = BElem::x(c2) * BElem::x(c2);
  GroupAlgElem s = c2->tau() + tau_shift(c2->tau(), -1);
  EXPECT_EQ(y_action_on_polynomials(x2), BElem::monomial(c2, 0, 0, s) * BElem::x(c2));
}

TEST(BTau, FiltrationDegree) {
  auto ctx = make_tau(cv({1, 2, 3}));
  BElem y = BElem::y(ctx), x = BElem::x(ctx);
  EXPECT_EQ((y * y + x).filtration_degree(), 2);
  EXPECT_EQ(BElem(ctx).filtration_degree(), -1);
  EXPECT_EQ((y * x * y).filtration_degree(), 2);
}
