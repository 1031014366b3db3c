#include <gtest/gtest.h>

#include "nakajima/koszul.hpp"

using namespace nakajima;

TEST(Koszul, DualTable) {
  for (int m = 1; m <= 2; ++m) {
    KoszulDual D(make_tau(GroupAlgElem::one(m)), 3, 4);
    auto t = D.table();
    EXPECT_EQ((t[{1, 1}]), 4 * m);
    EXPECT_EQ((t[{3, 0}]), 0);
    EXPECT_EQ((t[{2, 2}]), m);
    EXPECT_TRUE(dual_table_matches(t, m));
    t[{1, 0}] += 1;
    EXPECT_FALSE(dual_table_matches(t, m));
  }
}

TEST(Koszul, FrobeniusPairing) {
  KoszulDual D(make_tau(GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 3L)})));
  EXPECT_TRUE(frobenius_pairing_check(D, {1, 0}));
  EXPECT_TRUE(frobenius_pairing_check(D, {1, 1}));
}

TEST(Koszul, PartialEulerCharacteristic) {
  int m = 2;
  KoszulDual D(make_tau(GroupAlgElem::one(m)));
  auto r = koszul_check_bidegree(D, KoszulKind::Partial1, 2, 0);
  EXPECT_EQ(r.euler, 0);
  EXPECT_EQ(r.dims, (std::vector<long>{3L * m, 4L * m, static_cast<long>(m)}));
  EXPECT_TRUE(r.exact);
}

TEST(Koszul, FullComplexExact) {
  for (bool zero : {false, true}) {
    GroupAlgElem t = zero ? GroupAlgElem::zero(2) : GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 3L)});
    KoszulDual D(make_tau(t));
    auto r = koszul_check(D, KoszulKind::Full, 3, 3, 2);
    EXPECT_TRUE(r.all_exact()) << zero;
    for (const auto& e : r.entries) EXPECT_TRUE(e.d_squared_zero);
  }
}

TEST(Koszul, WordsOfType) {
  EXPECT_EQ(words_of_type({1, 1}).size(), 8u);
  EXPECT_EQ(words_of_type({2, 0}).size(), 4u);
}
