#include <gtest/gtest.h>

#include "nakajima/grassmannian.hpp"

using namespace nakajima;

namespace {
CycScalar q(long v) { return CycScalar(1, v); }

AdelicPoint point(int m, const GroupAlgElem& tau, std::vector<int> dimsW, const Poly& p) {
  AdelicPoint pt{m, tau, std::move(dimsW), p, Subspace()};
  pt.U = base_point_lattice(pt.model());
  return pt;
}
}  // namespace

TEST(Grassmannian, SplitP) {
  Poly x = Poly::x();
  auto roots = split_p(x * (x * x - Poly::constant(CycScalar(2, 4L))), 2);
  EXPECT_EQ(roots.size(), 3u);
  EXPECT_THROW(split_p(x * x - Poly::constant(q(2)), 1), std::domain_error);
  EXPECT_THROW(split_p(x * x + Poly::constant(CycScalar(2, 1L)), 2), std::domain_error);
}

TEST(Grassmannian, BasePointRoundtrip) {
  for (int m = 1; m <= 2; ++m) {
    GroupAlgElem tau = GroupAlgElem::one(m);
    Poly p = m == 1 ? Poly::x() * (Poly::x() - Poly::constant(q(1))) : Poly::x();
    AdelicPoint pt = point(m, tau, m == 1 ? std::vector<int>{1} : std::vector<int>{1, 0}, p);
    EXPECT_TRUE(is_primary_decomposable(pt).ok());
    FatModuleModel N = diff(pt, 3);
    EXPECT_TRUE(is_submodule(N.frame, N.N2));
    EXPECT_EQ(de_rham(N).U, pt.U);
    SymbolReport S = symbol(N);
    EXPECT_TRUE(S.is_base_point);
    EXPECT_EQ(pt.U.dim(), static_cast<size_t>(p.degree()));
  }
}

TEST(Grassmannian, FullSpace) {
  AdelicPoint pt = point(1, GroupAlgElem::one(1), {2}, Poly::x());
  pt.U = Subspace::full(pt.model().dim());
  FatModuleModel N = diff(pt, 2);
  EXPECT_EQ(N.N2, Subspace::full(N.frame.dim()));
  EXPECT_EQ(de_rham(N).U.dim(), 4u);
}

TEST(Grassmannian, ZeroModuleSymbol) {
  AdelicPoint pt = point(1, GroupAlgElem::one(1), {1}, Poly::x());
  FatModuleModel N{make_frame(make_tau(pt.tau), {1}, pt.p, 3), {1}, Subspace()};
  N.N2 = Subspace(N.frame.dim());
  SymbolReport S = symbol(N);
  EXPECT_EQ(S.lattice.dim(), 0u);
  EXPECT_FALSE(S.is_base_point);
}

TEST(Grassmannian, GeneratedByXAndY) {
  // m = 1, tau = 1, p = x, N generated by x and y inside x^{-1} B.
  auto ctx = make_tau(GroupAlgElem::one(1));
  for (int K : {3, 4}) {
    FatFrame F = make_frame(ctx, {1}, Poly::x(), K);
    Vec gx = zero_vec(F.dim()), gy = zero_vec(F.dim());
    F.add_term(gx, 0, 2, 0, GroupAlgElem::one(1), q(1));  // x * x, zero modulo x^2
    F.add_term(gy, 0, 1, 1, GroupAlgElem::one(1), q(1));  // x * y
    FatModuleModel N{F, {1}, generated_submodule(F, {gx, gy})};
    AdelicPoint U = de_rham(N, false);
    EXPECT_EQ(U.U.dim(), 1u) << K;
  }
}

TEST(Grassmannian, RankOneConstantRoundtrip) {
  AdelicPoint pt = point(1, GroupAlgElem::one(1), {1}, Poly::x());
  PointModel M = pt.model();
  pt.U = Subspace::span(M.dim(), {M.embed(0, Poly::constant(q(1)))});
  RoundtripReport rt = roundtrip_from_point(pt, 4);
  EXPECT_TRUE(rt.dr_diff) << rt.detail;
  EXPECT_TRUE(rt.diff_dr);
}

TEST(Grassmannian, TauZeroCounterexample) {
  AdelicPoint pt = point(1, GroupAlgElem::zero(1), {1}, Poly::x());
  PointModel M = pt.model();
  pt.U = Subspace::span(M.dim(), {M.embed(0, Poly::constant(q(1)))});
  RoundtripReport rt = roundtrip_from_point(pt, 4);
  EXPECT_FALSE(rt.dr_diff);
}

TEST(Grassmannian, PrimaryDecomposability) {
  Poly p = Poly::x() * (Poly::x() - Poly::constant(q(1)));
  AdelicPoint pt = point(1, GroupAlgElem::one(1), {1}, p);
  PointModel M = pt.model();
  Matrix X = M.x_action();
  Vec v0 = kernel_space(X * X).basis()[0];
  Matrix S = X - Matrix::identity(M.dim());
  Vec v1 = kernel_space(S * S).basis()[0];
  pt.U = Subspace::span(M.dim(), {add(v0, v1)});
  PrimaryReport mixed = is_primary_decomposable(pt);
  EXPECT_FALSE(mixed.ok());
  EXPECT_EQ(mixed.block_test, mixed.ss_test);
  pt.U = Subspace::span(M.dim(), {v0, v1});
  EXPECT_TRUE(is_primary_decomposable(pt).ok());
  EXPECT_TRUE(ss_submodule(pt));
}

TEST(Grassmannian, GroupActionSamples) {
  Poly p = Poly::x() * (Poly::x() - Poly::constant(q(2)));
  AdelicPoint pt = point(1, GroupAlgElem::one(1), {1}, p);
  std::mt19937_64 rng(3);
  pt = random_primary_point(pt.tau, {1}, p, rng);
  AdelicPoint same = gw_action_sample(pt, {{Poly::constant(q(1))}}, Poly::constant(q(1)));
  EXPECT_EQ(same.U, pt.U);
  AdelicPoint scaled = gw_action_sample(pt, {{Poly::constant(q(5))}}, Poly::constant(q(1)));
  EXPECT_EQ(scaled.p.monic(), pt.p.monic());
  EXPECT_EQ(scaled.U, pt.U);
}

TEST(Grassmannian, ModuleRoundtripRandom) {
  std::mt19937_64 rng(9);
  auto ctx = make_tau(GroupAlgElem::from_charvals({CycScalar(2, 1L), CycScalar(2, 3L)}));
  for (int i = 0; i < 4; ++i) {
    Poly p = random_p(2, 2, rng);
    FatModuleModel N = random_fat_module(ctx, {1, 0}, p, 3, rng);
    RoundtripReport rt = roundtrip_from_module(N);
    EXPECT_TRUE(rt.diff_dr && rt.dr_diff) << rt.detail;
  }
}
