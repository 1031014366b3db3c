#include <gtest/gtest.h>

#include "nakajima/monad.hpp"
#include "nakajima/suites.hpp"

using namespace nakajima;

namespace {
CycScalar q(long v) { return CycScalar(1, v); }
}  // namespace

TEST(Monad, RankOneSingleton) {
  MonadData M = build_monad(generate_cm(1, q(1)));
  EXPECT_TRUE(monad_identity_holds(M));
  EXPECT_TRUE(M.a.is_equivariant());
  EXPECT_TRUE(M.b.is_equivariant());
  MonadDims d = monad_cohomology_dims(M, 1, 1);
  EXPECT_EQ(d.middle, 3);
  EXPECT_EQ(d.ker_a, 0);
  EXPECT_EQ(d.coker_b, 0);
  FramingReport F = h1_framing_check(M);
  EXPECT_TRUE(F.ok()) << F.detail;
  EXPECT_EQ(F.h[3][1], 1);
}

TEST(Monad, CalogeroMoserTwo) {
  MonadData M = build_monad(generate_cm(2, q(1)));
  EXPECT_TRUE(monad_identity_holds(M));
  EXPECT_EQ(monad_cohomology_dims(M, 2, 2).middle, 7);
  LineReport L = restrict_to_line(M, LineKill::Z, 4);
  EXPECT_TRUE(L.ok());
  for (const auto& r : L.rows) EXPECT_EQ(r.middle, r.degree + 1);
}

TEST(Monad, EmptyV) {
  QuiverData d = zero_quiver(GroupAlgElem::one(1), {0}, {2});
  MonadData M = build_monad(d);
  EXPECT_EQ(M.source.size(), 0u);
  EXPECT_EQ(monad_cohomology_dims(M, 2, 3).middle, 2 * 3 * 4);
  EXPECT_EQ(h1_framing_check(M).h[3][1], 0);
}

TEST(Monad, RejectsInadmissible) {
  QuiverData z = zero_quiver(GroupAlgElem::one(1), {1}, {1});
  EXPECT_THROW(build_monad(z), std::invalid_argument);
}

TEST(Monad, LinesOfRankOne) {
  MonadData M = build_monad(generate_cm(1, q(1)));
  for (LineKill k : {LineKill::Z, LineKill::W}) {
    LineReport L = restrict_to_line(M, k, 2);
    EXPECT_TRUE(L.ok());
    for (const auto& r : L.rows) EXPECT_EQ(r.middle, r.degree + 1);
  }
}

TEST(Monad, CyclicInstanceFraming) {
  QuiverData d = cyclic_m2_instance();
  MonadData M = build_monad(d);
  EXPECT_TRUE(monad_identity_holds(M));
  FramingReport F = h1_framing_check(M);
  EXPECT_TRUE(F.ok()) << F.detail;
  EXPECT_EQ(F.h[3][1], d.n());
}

TEST(Trivialization, SingleEigenvalue) {
  QuiverData d = generate_cm(1, q(1));
  d.B1[0](0, 0) = q(5);  // B1 = (5) stays admissible for n = 1
  ASSERT_TRUE(is_admissible(d));
  MonadData M = build_monad(d);
  TrivializationPair T = build_trivialization(M);
  EXPECT_TRUE(T.P == BiPoly::x() - BiPoly::z() * q(5));
  EXPECT_TRUE(T.P.eval(q(1), q(0)).is_one());
  TrivializationReport R = check_trivialization(M, T, 3, 3);
  EXPECT_TRUE(R.ok()) << R.detail;
}

TEST(Trivialization, CalogeroMoserTwo) {
  MonadData M = build_monad(generate_cm(2, q(1)));
  TrivializationPair T = build_trivialization(M);
  TrivializationReport R = check_trivialization(M, T, 3, 3);
  EXPECT_TRUE(R.composite_is_p2);
  EXPECT_TRUE(R.pointwise_ok);
  EXPECT_TRUE(R.ok()) << R.detail;
}

TEST(Trivialization, CyclicInstance) {
  MonadData M = build_monad(cyclic_m2_instance());
  TrivializationPair T = build_trivialization(M);
  EXPECT_TRUE(check_trivialization(M, T, 3, 3).ok());
  EXPECT_TRUE(T.P_prime.eval(CycScalar(2, 1L), CycScalar(2, 0L)).is_one());
}
