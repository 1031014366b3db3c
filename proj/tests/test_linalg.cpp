#include <gtest/gtest.h>

#include "nakajima/linalg.hpp"
#include "nakajima/poly.hpp"

using namespace nakajima;

namespace {
CycScalar q(long v) { return CycScalar(1, v); }
Matrix mat(std::vector<std::vector<long>> rows) {
  Matrix a(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[0].size(); ++j) a(i, j) = q(rows[i][j]);
  return a;
}
}  // namespace

TEST(Linalg, RankKernelDeterminant) {
  Matrix a = mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(a), 2u);
  auto k = kernel(a);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero_vec(a.apply(k[0])));
  EXPECT_TRUE(determinant(a).is_zero());
  EXPECT_EQ(determinant(mat({{2, 1}, {1, 1}})), q(1));
}

TEST(Linalg, InverseAndSolve) {
  Matrix a = mat({{2, 1}, {7, 4}});
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  auto x = solve(a, {q(1), q(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a.apply(*x), (Vec{q(1), q(2)}));
  EXPECT_FALSE(solve(mat({{1, 1}, {1, 1}}), {q(1), q(2)}).has_value());
}

TEST(Linalg, SubspaceCanonicalForm) {
  Subspace a = Subspace::span(3, {{q(1), q(1), q(0)}, {q(0), q(1), q(1)}});
  Subspace b = Subspace::span(3, {{q(1), q(2), q(1)}, {q(1), q(0), q(-1)}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(Vec{q(2), q(3), q(1)}));
  EXPECT_FALSE(a.contains(Vec{q(0), q(0), q(1)}));
  Subspace e = Subspace::span(3, {{q(0), q(0), q(1)}});
  EXPECT_EQ(a.intersect(e).dim(), 0u);
  EXPECT_EQ(a.sum(e), Subspace::full(3));
}

TEST(Linalg, Preimage) {
  Matrix a = mat({{1, 0}, {0, 0}});
  Subspace zero(2);
  EXPECT_EQ(preimage(a, zero), Subspace::span(2, {{q(0), q(1)}}));
}

TEST(Poly, DivisionGcdRoots) {
  Poly x = Poly::x();
  Poly p = (x - Poly::constant(q(1))) * (x - Poly::constant(q(1))) * (x + Poly::constant(q(2)));
  auto [quo, rem] = divmod(p, x - Poly::constant(q(1)));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(p, p.derivative()).monic(), (x - Poly::constant(q(1))));
  auto roots = rational_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(squarefree_part(p).degree(), 2);
}

TEST(Poly, BiPolyAdjugate) {
  // adj(A) A = det(A) Id for A = x Id - B z.
  BiPoly x = BiPoly::x(), z = BiPoly::z();
  BiMatrix a{{x - z * q(2), z}, {z * q(3), x}};
  BiMatrix adj = bi_adjugate(a);
  BiPoly det = bi_determinant(a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      BiPoly s;
      for (int k = 0; k < 2; ++k) s = s + adj[i][k] * a[k][j];
      EXPECT_TRUE(s == (i == j ? det : BiPoly()));
    }
}
