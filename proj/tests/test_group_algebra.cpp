#include <gtest/gtest.h>

#include "nakajima/group_algebra.hpp"

using namespace nakajima;

namespace {
GroupAlgElem cv(std::vector<long> v) {
  std::vector<CycScalar> c;
  for (long x : v) c.push_back(CycScalar(static_cast<int>(v.size()), x));
  return GroupAlgElem::from_charvals(c);
}
}  // namespace

TEST(GroupAlgebra, CharValues) {
  GroupAlgElem c = GroupAlgElem::scalar(1, CycScalar(1, 7L));
  EXPECT_EQ(char_value(c, 0), CycScalar(1, 7L));
  EXPECT_EQ(char_value(c, 5), CycScalar(1, 7L));
  GroupAlgElem t = GroupAlgElem::from_group({CycScalar(2, 2L), CycScalar(2, 3L)});
  EXPECT_EQ(char_value(t, 0), CycScalar(2, 5L));
  EXPECT_EQ(char_value(t, 1), CycScalar(2, -1L));
  GroupAlgElem g = GroupAlgElem::group_element(3, 1);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(char_value(g, j), CycScalar::zeta_power(3, j));
}

TEST(GroupAlgebra, FourierRoundtrip) {
  std::vector<CycScalar> coeffs{CycScalar(4, 1L), CycScalar(4, -2L), CycScalar::zeta_power(4, 1), CycScalar(4, 5L)};
  EXPECT_EQ(GroupAlgElem::from_group(coeffs).group_coeffs(), coeffs);
}

TEST(GroupAlgebra, ShiftAndWindow) {
  GroupAlgElem t = cv({1, -1});
  EXPECT_EQ(tau_shift(t, 0), t);
  EXPECT_EQ(tau_shift(t, 1), cv({-1, 1}));
  EXPECT_EQ(tau_shift(t, 2), t);
  EXPECT_TRUE(tau_window(t, 0, 1).is_zero());
  GroupAlgElem one = GroupAlgElem::scalar(1, CycScalar(1, 3L));
  EXPECT_EQ(tau_window(one, 2, 5), GroupAlgElem::scalar(1, CycScalar(1, 12L)));
}

TEST(GroupAlgebra, FullPeriodWindowIsScalar) {
  GroupAlgElem t = cv({1, 4, -2});
  for (int a = -3; a <= 3; ++a) {
    GroupAlgElem w = tau_window(t, a, a + 2);
    EXPECT_EQ(w, GroupAlgElem::scalar(3, t.full_period()));
  }
}

TEST(GroupAlgebra, Genericity) {
  EXPECT_FALSE(is_generic(GroupAlgElem::zero(1)).generic);
  EXPECT_TRUE(is_generic(GroupAlgElem::one(1)).generic);
  EXPECT_TRUE(is_generic(cv({1, 1})).generic);
  GenericityResult g = is_generic(cv({1, -1}));
  EXPECT_FALSE(g.generic);
  EXPECT_TRUE(tau_window(cv({1, -1}), g.a, g.b).char_value(g.j).is_zero());
  EXPECT_EQ(brute_force_generic(cv({1, -1}), 8).generic, false);
  EXPECT_EQ(brute_force_generic(cv({1, 1}), 8).generic, true);
}

TEST(GroupAlgebra, InvertibilityAndSumOfWindows) {
  EXPECT_FALSE(is_invertible_in_group_algebra(GroupAlgElem::zero(3)));
  GroupAlgElem t = cv({1, 3});
  EXPECT_EQ(sum_of_windows(t, 0, 0, 1), t);
  GroupAlgElem g = cv({2, 1});
  GroupAlgElem s = sum_of_windows(g, 1, 3, 2);
  EXPECT_EQ(s, GroupAlgElem::scalar(2, g.full_period() * CycScalar(2, 3L)));
  EXPECT_EQ(g * g.inverse(), GroupAlgElem::one(2));
}
