#include <gtest/gtest.h>

#include "nakajima/kashiwara.hpp"

using namespace nakajima;

TEST(Kashiwara, Dimensions) {
  auto c1 = make_tau(GroupAlgElem::one(1));
  EXPECT_EQ(kashiwara_I(c1, CycScalar(1, 0L), {0}, 6).dim(), 7u);
  auto c2 = make_tau(GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 2L)}));
  EXPECT_EQ(kashiwara_I(c2, CycScalar(2, 0L), {1}, 0).dim(), 1u);
  EXPECT_EQ(kashiwara_I(c2, CycScalar(2, 1L), {0}, 3).dim(), 8u);
}

TEST(Kashiwara, Roundtrip) {
  auto c1 = make_tau(GroupAlgElem::one(1));
  auto M = kashiwara_I(c1, CycScalar(1, 0L), {0}, 4);
  EXPECT_EQ(kashiwara_K(M, CycScalar(1, 0L), c1->tau()).dim(), 1);
  auto c2 = make_tau(GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 2L)}));
  for (int K : {4, 5}) {
    auto N = kashiwara_I(c2, CycScalar(2, 0L), {1}, K);
    EXPECT_EQ(kashiwara_K(N, CycScalar(2, 0L), c2->tau()).multiplicities, (std::vector<int>{0, 1}));
  }
}

TEST(Kashiwara, ZeroModule) {
  auto c1 = make_tau(GroupAlgElem::one(1));
  auto M = kashiwara_I(c1, CycScalar(1, 0L), {}, 3);
  EXPECT_EQ(kashiwara_K(M, CycScalar(1, 0L), c1->tau()).dim(), 0);
}

TEST(Kashiwara, PymIdentities) {
  auto c1 = make_tau(GroupAlgElem::one(1));
  auto M = kashiwara_I(c1, CycScalar(1, 0L), {0}, 4);
  EXPECT_TRUE(pym_recursion_check(M, CycScalar(1, 0L), c1->tau(), -1).ok());
  EXPECT_TRUE(pym_recursion_check(M, CycScalar(1, 0L), c1->tau(), 0).ok());
  auto c2 = make_tau(GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 2L)}));
  auto N = kashiwara_I(c2, CycScalar(2, 1L), {0}, 4);
  for (int k : {0, 1}) EXPECT_TRUE(pym_recursion_check(N, CycScalar(2, 1L), c2->tau(), k).ok()) << k;
}

TEST(Kashiwara, TruncationGuard) {
  auto c1 = make_tau(GroupAlgElem::one(1));
  auto M = kashiwara_I(c1, CycScalar(1, 0L), {0}, 1);
  EXPECT_THROW(pym_recursion_check(M, CycScalar(1, 0L), c1->tau(), 3), std::invalid_argument);
}
