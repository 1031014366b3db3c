#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nakajima/btau.hpp"
#include "nakajima/linalg.hpp"
#include "nakajima/poly.hpp"

namespace nakajima {

// Model of (W (x) CG[x]) / p^2 (W (x) CG[x]).  Coordinate (t, a) is w_t (x) x^a
// with a < 2 deg p, stored at t * 2 deg p + a.
struct PointModel {
  int m = 1;
  std::vector<int> w_labels;
  Poly p;

  int span() const { return 2 * std::max(p.degree(), 0); }  // x-degrees per w_t
  size_t dim() const { return w_labels.size() * span(); }
  size_t index(size_t t, int a) const { return t * span() + a; }
  // Gamma character of each coordinate.
  std::vector<int> characters() const;
  // Right multiplication by x.
  Matrix x_action() const;
  // Coordinates of w_t (x) f(x) reduced modulo p^2.
  Vec embed(size_t t, const Poly& f) const;
};

// Point of the adelic Grassmannian, stored as U = p U' / p^2 W_0.
struct AdelicPoint {
  int m = 1;
  GroupAlgElem tau;
  std::vector<int> dimsW;
  Poly p;
  Subspace U;

  PointModel model() const;
};

std::vector<int> labels_from_dims(const std::vector<int>& dims);

struct RootOfP {
  CycScalar root;
  int multiplicity = 0;  // in p
};

// Roots of p = x^{s_0} prod (x^m - mu^m)^{s_mu} with every mu rational times a
// power of zeta.  Throws std::domain_error for unsupported p.
std::vector<RootOfP> split_p(const Poly& p, int m);

// Semisimple part of a matrix annihilated by p, by Newton iteration on the
// squarefree part of p.
Matrix semisimple_part(const Matrix& x, const Poly& p);

struct PrimaryReport {
  bool gamma_stable = false;
  bool block_test = false;  // U is the sum of its intersections with the root blocks
  bool ss_test = false;     // U is stable under the semisimple part of x
  std::vector<std::pair<CycScalar, Subspace>> blocks;  // U cap block per root
  bool ok() const { return gamma_stable && block_test && ss_test; }
};
PrimaryReport is_primary_decomposable(const AdelicPoint& pt);
// The semisimplification test alone; needs no roots of p.
bool ss_submodule(const AdelicPoint& pt);

// Frame for (W (x) B) / p^2 (W (x) B) truncated at y-degree bound_y.
// Coordinate (t, a, b) is w_t (x) x^a y^b.
struct FatFrame {
  TauPtr ctx;
  std::vector<int> w_labels;
  Poly p;
  int bound_y = 0;

  int span() const { return 2 * std::max(p.degree(), 0); }
  size_t dim() const { return w_labels.size() * span() * (bound_y + 1); }
  size_t index(size_t t, int a, int b) const { return (t * (bound_y + 1) + b) * span() + a; }
  std::vector<int> characters() const;
  std::vector<int> y_degrees() const;
  // Right multiplication by h on the sub-frame of y-degree <= src_bound,
  // landing in this frame.  Throws if some term leaves the frame.
  Matrix right_action(const BElem& h, int src_bound) const;
  // Coordinates of w_t (x) x^a y^b t with t in CG; x^a reduced modulo p^2.
  // Returns false if b exceeds bound_y.
  bool add_term(Vec& v, size_t t, int a, int b, const GroupAlgElem& g, const CycScalar& c) const;
  // Elements of y-degree <= k.
  Subspace filtration(int k) const;
  // Projection killing y-degree >= 1, onto the PointModel coordinates.
  Matrix de_rham_projection() const;
};

struct FatModuleModel {
  FatFrame frame;
  std::vector<int> dimsW;
  Subspace N2;  // p N / p^2 (W (x) B), cut to y-degree <= bound_y
};

FatFrame make_frame(const TauPtr& ctx, const std::vector<int>& dimsW, const Poly& p, int bound_y);

// Closure under x, Gamma and y (as far as the truncation allows).
Subspace generated_submodule(const FatFrame& F, const std::vector<Vec>& gens);
// Checks closure under x, Gamma and y within the frame.
bool is_submodule(const FatFrame& F, const Subspace& S);

// Projection to y-degree zero.  Throws std::runtime_error when the result at
// bound_y and bound_y - 1 differ.
AdelicPoint de_rham(const FatModuleModel& N, bool require_stable = true);
// Largest x-stable subspace of the preimage of U, exact in the frame.
FatModuleModel diff(const AdelicPoint& U, int bound_y);

struct SymbolReport {
  std::vector<Subspace> graded;  // leading coefficients in y-degree k, k = 0..bound_y
  int stable_at = -1;            // graded[k] is constant for k >= stable_at
  Subspace lattice;              // p Symb / p^2 W_0 in the PointModel
  bool is_base_point = false;
};
// Throws std::runtime_error if the graded pieces do not stabilize.
SymbolReport symbol(const FatModuleModel& N);
// p W_0 / p^2 W_0.
Subspace base_point_lattice(const PointModel& M);

struct RoundtripReport {
  bool dr_diff = false;  // DR(Diff(U)) == U
  bool diff_dr = false;  // Diff(DR(N)) == N
  std::string detail;
};
RoundtripReport roundtrip_from_point(const AdelicPoint& U, int bound_y);
RoundtripReport roundtrip_from_module(const FatModuleModel& N);

// p = product of d factors x or (x^m - c^m) with small rational c.
Poly random_p(int m, int d, std::mt19937_64& rng);
// Gamma-stable U built from random vectors inside single root blocks.
AdelicPoint random_primary_point(const GroupAlgElem& tau, const std::vector<int>& dimsW, const Poly& p,
                                 std::mt19937_64& rng);
// Submodule generated by random vectors killed by x - mu, mu a root of p.
FatModuleModel random_fat_module(const TauPtr& ctx, const std::vector<int>& dimsW, const Poly& p, int bound_y,
                                 std::mt19937_64& rng);

// span{A lift(u)} + A p_from^2 W_0, reduced modulo p_to^2.  A[t'][t] maps w_t
// to w_{t'}.
Subspace transport(const PointModel& from, const Subspace& U, const std::vector<std::vector<Poly>>& A,
                   const PointModel& to);

// s = S(x) / q(x) acting on W (x) CG(x); S[t'][t] maps w_t to w_{t'}.
// The new point uses p' = p q det S.  Throws if S is singular or not equivariant.
AdelicPoint gw_action_sample(const AdelicPoint& U, const std::vector<std::vector<Poly>>& S, const Poly& q);

}  // namespace nakajima
