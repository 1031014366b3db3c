#include "nakajima/grassmannian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nakajima {

namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

GroupAlgElem idempotent(int m, int k) {
  std::vector<CycScalar> cv(m, CycScalar(m));
  cv[mod(k, m)] = CycScalar(m, 1L);
  return GroupAlgElem::from_charvals(std::move(cv));
}

// x^a modulo p^2, for a = 0..max_a.
std::vector<Poly> x_powers_mod(const Poly& p2, int max_a) {
  std::vector<Poly> out;
  Poly cur = Poly::constant(CycScalar(1, 1L));
  for (int a = 0; a <= max_a; ++a) {
    out.push_back(p2.degree() > 0 ? divmod(cur, p2).second : Poly());
    cur = cur * Poly::x();
  }
  return out;
}

Vec project_character(const Vec& v, const std::vector<int>& chars, int c) {
  Vec out = zero_vec(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    if (chars[i] == c) out[i] = v[i];
  return out;
}

bool gamma_stable(const Subspace& U, const std::vector<int>& chars, int m) {
  for (const auto& v : U.basis())
    for (int c = 0; c < m; ++c)
      if (!U.contains(project_character(v, chars, c))) return false;
  return true;
}

Matrix power(const Matrix& a, int e) {
  Matrix r = Matrix::identity(a.rows());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

Matrix shifted(const Matrix& x, const CycScalar& lambda) {
  Matrix r = x;
  for (size_t i = 0; i < x.rows(); ++i) r(i, i) -= lambda;
  return r;
}

// Integer c with c^m = n, if any.
bool exact_root(const mpz_class& n, int m, mpz_class& out) {
  if (n < 0) return false;
  return mpz_root(out.get_mpz_t(), n.get_mpz_t(), m) != 0;
}

std::vector<Vec> random_combinations(const std::vector<Vec>& basis, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-2, 2);
  std::vector<Vec> out;
  if (basis.empty()) return out;
  for (int i = 0; i < count; ++i) {
    Vec v = zero_vec(basis[0].size());
    for (const auto& b : basis) v = add(v, scale(b, CycScalar(1, dist(rng))));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<int> labels_from_dims(const std::vector<int>& dims) {
  std::vector<int> out;
  for (size_t i = 0; i < dims.size(); ++i)
    for (int k = 0; k < dims[i]; ++k) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> PointModel::characters() const {
  std::vector<int> out(dim());
  for (size_t t = 0; t < w_labels.size(); ++t)
    for (int a = 0; a < span(); ++a) out[index(t, a)] = mod(w_labels[t] - a, m);
  return out;
}

Vec PointModel::embed(size_t t, const Poly& f) const {
  Vec v = zero_vec(dim());
  if (span() == 0) return v;
  Poly r = divmod(f, p * p).second;
  for (int a = 0; a <= r.degree(); ++a) v[index(t, a)] += r.coeffs()[a];
  return v;
}

Matrix PointModel::x_action() const {
  Matrix X(dim(), dim());
  for (size_t t = 0; t < w_labels.size(); ++t)
    for (int a = 0; a < span(); ++a) {
      Vec v = embed(t, Poly::monomial(CycScalar(1, 1L), a + 1));
      for (size_t i = 0; i < v.size(); ++i) X(i, index(t, a)) = v[i];
    }
  return X;
}

PointModel AdelicPoint::model() const { return PointModel{m, labels_from_dims(dimsW), p}; }

std::vector<RootOfP> split_p(const Poly& p, int m) {
  if (p.is_zero()) throw std::domain_error("p must be nonzero");
  std::vector<RootOfP> roots;
  int s0 = 0;
  while (s0 <= p.degree() && p.coeffs()[s0].is_zero()) ++s0;
  if (s0 > 0) roots.push_back({CycScalar(m), s0});
  std::vector<CycScalar> qc;
  for (int i = s0; i <= p.degree(); ++i) {
    const CycScalar& c = p.coeffs()[i];
    if (!c.is_rational()) throw std::domain_error("unsupported p: coefficients must be rational");
    if ((i - s0) % m != 0) {
      if (!c.is_zero()) throw std::domain_error("unsupported p: not a product of x and x^m - mu^m factors");
      continue;
    }
    qc.push_back(c);
  }
  Poly q(qc);
  if (q.degree() <= 0) return roots;
  int total = 0;
  for (const auto& [rho, mult] : rational_roots(q)) {
    total += mult;
    bool neg = rho < 0;
    if (neg && m % 2 == 0) throw std::domain_error("unsupported p: root outside the cyclotomic field");
    Rational a = neg ? Rational(-rho) : rho;
    mpz_class num, den;
    if (!exact_root(a.get_num(), m, num) || !exact_root(a.get_den(), m, den))
      throw std::domain_error("unsupported p: mu^m is not an m-th power of a rational");
    Rational c(num, den);
    if (neg) c = -c;
    for (int j = 0; j < m; ++j) roots.push_back({CycScalar::zeta_power(m, j) * CycScalar(m, c), mult});
  }
  if (total != q.degree()) throw std::domain_error("unsupported p: does not split over Q(zeta_m)");
  return roots;
}

Matrix semisimple_part(const Matrix& x, const Poly& p) {
  if (x.rows() == 0 || p.degree() <= 0) return x;
  Poly f = squarefree_part(p), df = f.derivative();
  Matrix y = x;
  for (int it = 0; it < 64; ++it) {
    Matrix fy = f.eval(y);
    if (fy.is_zero()) return y;
    auto inv = inverse(df.eval(y));
    if (!inv) throw std::runtime_error("semisimple_part: f'(Y) is singular");
    y = y - fy * *inv;
  }
  throw std::runtime_error("semisimple_part: Newton iteration did not converge");
}

bool ss_submodule(const AdelicPoint& pt) {
  PointModel M = pt.model();
  if (!gamma_stable(pt.U, M.characters(), pt.m)) return false;
  Matrix xs = semisimple_part(M.x_action(), pt.p);
  return pt.U.contains(pt.U.image(xs));
}

PrimaryReport is_primary_decomposable(const AdelicPoint& pt) {
  PrimaryReport rep;
  PointModel M = pt.model();
  rep.gamma_stable = gamma_stable(pt.U, M.characters(), pt.m);
  Matrix X = M.x_action();
  rep.ss_test = pt.U.contains(pt.U.image(semisimple_part(X, pt.p)));
  size_t total = 0, ambient = 0;
  for (const auto& r : split_p(pt.p, pt.m)) {
    Subspace E = kernel_space(power(shifted(X, r.root), 2 * r.multiplicity));
    ambient += E.dim();
    Subspace part = pt.U.intersect(E);
    total += part.dim();
    rep.blocks.push_back({r.root, part});
  }
  if (ambient != M.dim()) throw std::logic_error("root blocks do not fill the model");
  rep.block_test = total == pt.U.dim();
  return rep;
}

FatFrame make_frame(const TauPtr& ctx, const std::vector<int>& dimsW, const Poly& p, int bound_y) {
  if (bound_y < 0) throw std::invalid_argument("bound_y must be >= 0");
  return FatFrame{ctx, labels_from_dims(dimsW), p, bound_y};
}

std::vector<int> FatFrame::characters() const {
  std::vector<int> out(dim());
  int m = ctx->m();
  for (size_t t = 0; t < w_labels.size(); ++t)
    for (int b = 0; b <= bound_y; ++b)
      for (int a = 0; a < span(); ++a) out[index(t, a, b)] = mod(w_labels[t] - a + b, m);
  return out;
}

std::vector<int> FatFrame::y_degrees() const {
  std::vector<int> out(dim());
  for (size_t t = 0; t < w_labels.size(); ++t)
    for (int b = 0; b <= bound_y; ++b)
      for (int a = 0; a < span(); ++a) out[index(t, a, b)] = b;
  return out;
}

bool FatFrame::add_term(Vec& v, size_t t, int a, int b, const GroupAlgElem& g, const CycScalar& c) const {
  if (b > bound_y) return false;
  if (span() == 0) return true;
  CycScalar val = c * g.char_value(w_labels[t] - a + b);
  if (val.is_zero()) return true;
  Poly r = divmod(Poly::monomial(CycScalar(1, 1L), a), p * p).second;
  for (int i = 0; i <= r.degree(); ++i)
    if (!r.coeffs()[i].is_zero()) v[index(t, i, b)].add_mul(val, r.coeffs()[i]);
  return true;
}

Matrix FatFrame::right_action(const BElem& h, int src_bound) const {
  int m = ctx->m();
  Matrix A(dim(), dim());
  int top = 2 * std::max(p.degree(), 0) + bound_y + 4;
  std::vector<Poly> xp = x_powers_mod(p * p, top);
  for (size_t t = 0; t < w_labels.size(); ++t)
    for (int b = 0; b <= std::min(src_bound, bound_y); ++b)
      for (int a = 0; a < span(); ++a) {
        size_t col = index(t, a, b);
        BElem prod = BElem::monomial(ctx, a, b, idempotent(m, w_labels[t] - a + b)) * h;
        for (const auto& [key, g] : prod.terms()) {
          auto [A_, B_] = key;
          if (B_ > bound_y) throw std::logic_error("right_action leaves the frame");
          const CycScalar& val = g.char_value(w_labels[t] - A_ + B_);
          if (val.is_zero()) continue;
          Poly r = A_ <= top ? xp[A_] : divmod(Poly::monomial(CycScalar(1, 1L), A_), p * p).second;
          for (int i = 0; i <= r.degree(); ++i)
            if (!r.coeffs()[i].is_zero()) A(index(t, i, B_), col).add_mul(val, r.coeffs()[i]);
        }
      }
  return A;
}

Subspace FatFrame::filtration(int k) const {
  std::vector<Vec> gens;
  auto deg = y_degrees();
  for (size_t i = 0; i < dim(); ++i)
    if (deg[i] <= k) {
      Vec e = zero_vec(dim());
      e[i] = CycScalar(1, 1L);
      gens.push_back(std::move(e));
    }
  return Subspace::span(dim(), gens);
}

Matrix FatFrame::de_rham_projection() const {
  PointModel M{ctx->m(), w_labels, p};
  Matrix P(M.dim(), dim());
  for (size_t t = 0; t < w_labels.size(); ++t)
    for (int a = 0; a < span(); ++a) P(M.index(t, a), index(t, a, 0)) = CycScalar(1, 1L);
  return P;
}

Subspace generated_submodule(const FatFrame& F, const std::vector<Vec>& gens) {
  int m = F.ctx->m();
  auto chars = F.characters();
  Matrix X = F.right_action(BElem::x(F.ctx), F.bound_y);
  Matrix Y = F.right_action(BElem::y(F.ctx), F.bound_y - 1);
  Subspace S(F.dim()), low = F.filtration(F.bound_y - 1);
  auto absorb = [&](const Vec& v) {
    for (int c = 0; c < m; ++c) S.add(project_character(v, chars, c));
  };
  for (const auto& g : gens) absorb(g);
  while (true) {
    size_t before = S.dim();
    std::vector<Vec> cur = S.basis();
    for (const auto& v : cur) absorb(X.apply(v));
    Subspace lowS = S.intersect(low);
    for (const auto& v : lowS.basis()) absorb(Y.apply(v));
    if (S.dim() == before) break;
  }
  return S;
}

bool is_submodule(const FatFrame& F, const Subspace& S) {
  if (!gamma_stable(S, F.characters(), F.ctx->m())) return false;
  Matrix X = F.right_action(BElem::x(F.ctx), F.bound_y);
  if (!S.contains(S.image(X))) return false;
  if (F.bound_y == 0) return true;
  Matrix Y = F.right_action(BElem::y(F.ctx), F.bound_y - 1);
  return S.contains(S.intersect(F.filtration(F.bound_y - 1)).image(Y));
}

AdelicPoint de_rham(const FatModuleModel& N, bool require_stable) {
  const FatFrame& F = N.frame;
  Matrix P = F.de_rham_projection();
  AdelicPoint pt{F.ctx->m(), F.ctx->tau(), N.dimsW, F.p, N.N2.image(P)};
  if (require_stable && F.bound_y >= 1) {
    Subspace lower = N.N2.intersect(F.filtration(F.bound_y - 1)).image(P);
    if (lower != pt.U)
      throw std::runtime_error("de_rham: result not stable in the y-truncation (dim " + std::to_string(lower.dim()) +
                               " at bound_y-1 vs " + std::to_string(pt.U.dim()) + "); increase the y-truncation");
  }
  return pt;
}

FatModuleModel diff(const AdelicPoint& U, int bound_y) {
  FatFrame F = make_frame(make_tau(U.tau), U.dimsW, U.p, bound_y);
  Matrix P = F.de_rham_projection();
  Matrix X = F.right_action(BElem::x(F.ctx), bound_y);
  Subspace S = preimage(P, U.U);
  while (true) {
    Subspace next = S.intersect(preimage(X, S));
    if (next == S) break;
    S = std::move(next);
  }
  if (!is_submodule(F, S)) throw std::logic_error("diff: fixed point is not a submodule");
  return FatModuleModel{F, U.dimsW, S};
}

Subspace base_point_lattice(const PointModel& M) {
  std::vector<Vec> gens;
  for (size_t t = 0; t < M.w_labels.size(); ++t)
    for (int a = 0; a < std::max(M.p.degree(), 0); ++a)
      gens.push_back(M.embed(t, M.p * Poly::monomial(CycScalar(1, 1L), a)));
  return Subspace::span(M.dim(), gens);
}

SymbolReport symbol(const FatModuleModel& N) {
  const FatFrame& F = N.frame;
  PointModel M{F.ctx->m(), F.w_labels, F.p};
  SymbolReport rep;
  for (int k = 0; k <= F.bound_y; ++k) {
    Matrix Pk(M.dim(), F.dim());
    for (size_t t = 0; t < F.w_labels.size(); ++t)
      for (int a = 0; a < F.span(); ++a) Pk(M.index(t, a), F.index(t, a, k)) = CycScalar(1, 1L);
    rep.graded.push_back(N.N2.intersect(F.filtration(k)).image(Pk));
  }
  for (int k = 0; k < F.bound_y; ++k)
    if (!rep.graded[k + 1].contains(rep.graded[k])) throw std::logic_error("symbol: graded pieces not increasing");
  int K = F.bound_y;
  int s = K;
  while (s > 0 && rep.graded[s - 1] == rep.graded[K]) --s;
  if (s >= K) throw std::runtime_error("symbol: leading coefficients not stabilized; increase the y-truncation");
  rep.stable_at = s;
  rep.lattice = rep.graded[K];
  rep.is_base_point = rep.lattice == base_point_lattice(M);
  return rep;
}

RoundtripReport roundtrip_from_point(const AdelicPoint& U, int bound_y) {
  RoundtripReport rep;
  FatModuleModel N = diff(U, bound_y);
  AdelicPoint U2 = de_rham(N, false);
  rep.dr_diff = U2.U == U.U;
  FatModuleModel N2 = diff(U2, bound_y);
  rep.diff_dr = N2.N2 == N.N2;
  std::ostringstream os;
  os << "dim U " << U.U.dim() << ", dim Diff(U) " << N.N2.dim() << ", dim DR(Diff(U)) " << U2.U.dim();
  rep.detail = os.str();
  return rep;
}

RoundtripReport roundtrip_from_module(const FatModuleModel& N) {
  RoundtripReport rep;
  AdelicPoint U = de_rham(N, false);
  FatModuleModel N2 = diff(U, N.frame.bound_y);
  rep.diff_dr = N2.N2 == N.N2;
  rep.dr_diff = de_rham(N2, false).U == U.U;
  std::ostringstream os;
  os << "dim N " << N.N2.dim() << ", dim DR(N) " << U.U.dim() << ", dim Diff(DR(N)) " << N2.N2.dim();
  rep.detail = os.str();
  return rep;
}

Poly random_p(int m, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<long> cdist(1, 2);
  Poly p = Poly::constant(CycScalar(1, 1L));
  int deg = 0;
  while (deg < d) {
    if (d - deg >= m && coin(rng) != 0) {
      long c = cdist(rng) * (coin(rng) == 0 ? -1 : 1);
      if (m % 2 == 0 && c < 0) c = -c;
      Rational cm = 1;
      for (int i = 0; i < m; ++i) cm *= c;
      p = p * (Poly::monomial(CycScalar(1, 1L), m) - Poly::constant(CycScalar(1, cm)));
      deg += m;
    } else {
      p = p * Poly::x();
      deg += 1;
    }
  }
  return p;
}

AdelicPoint random_primary_point(const GroupAlgElem& tau, const std::vector<int>& dimsW, const Poly& p,
                                 std::mt19937_64& rng) {
  int m = tau.m();
  AdelicPoint pt{m, tau, dimsW, p, Subspace()};
  PointModel M = pt.model();
  Matrix X = M.x_action();
  auto chars = M.characters();
  Subspace U(M.dim());
  std::uniform_int_distribution<int> count(0, 2);
  for (const auto& r : split_p(p, m)) {
    Subspace E = kernel_space(power(shifted(X, r.root), 2 * r.multiplicity));
    // Gamma translates v.g^k stay inside single root blocks.
    for (const auto& v : random_combinations(E.basis(), count(rng), rng))
      for (int c = 0; c < m; ++c) U.add(project_character(v, chars, c));
  }
  pt.U = U;
  return pt;
}

FatModuleModel random_fat_module(const TauPtr& ctx, const std::vector<int>& dimsW, const Poly& p, int bound_y,
                                 std::mt19937_64& rng) {
  int extra = 2 * std::max(p.degree(), 0) + 2;
  FatFrame big = make_frame(ctx, dimsW, p, bound_y + extra);
  FatFrame F = make_frame(ctx, dimsW, p, bound_y);
  std::uniform_int_distribution<int> count(0, 2);
  // Generators killed by x - root: a submodule is determined by its part there.
  std::vector<Vec> gens;
  for (const auto& r : split_p(p, ctx->m())) {
    Matrix A = big.right_action(BElem::x(ctx) - BElem::scalar(ctx, r.root), big.bound_y);
    auto more = random_combinations(kernel_space(A).basis(), count(rng), rng);
    gens.insert(gens.end(), more.begin(), more.end());
  }
  Subspace S = generated_submodule(big, gens).intersect(big.filtration(bound_y));
  std::vector<Vec> small;
  for (const auto& v : S.basis()) {
    Vec w = zero_vec(F.dim());
    for (size_t t = 0; t < F.w_labels.size(); ++t)
      for (int b = 0; b <= bound_y; ++b)
        for (int a = 0; a < F.span(); ++a) w[F.index(t, a, b)] = v[big.index(t, a, b)];
    small.push_back(std::move(w));
  }
  return FatModuleModel{F, dimsW, Subspace::span(F.dim(), small)};
}

Subspace transport(const PointModel& from, const Subspace& U, const std::vector<std::vector<Poly>>& A,
                   const PointModel& to) {
  size_t r = from.w_labels.size();
  auto apply = [&](const std::vector<Poly>& f) {
    Vec v = zero_vec(to.dim());
    for (size_t t2 = 0; t2 < r; ++t2) {
      Poly g;
      for (size_t t = 0; t < r; ++t) g = g + A[t2][t] * f[t];
      v = add(v, to.embed(t2, g));
    }
    return v;
  };
  std::vector<Vec> gens;
  for (const auto& u : U.basis()) {
    std::vector<Poly> f(r);
    for (size_t t = 0; t < r; ++t) {
      std::vector<CycScalar> c(from.span());
      for (int a = 0; a < from.span(); ++a) c[a] = u[from.index(t, a)];
      f[t] = Poly(c);
    }
    gens.push_back(apply(f));
  }
  Poly p2 = from.p * from.p;
  for (size_t t = 0; t < r; ++t)
    for (int a = 0; a < std::max(to.span(), 1); ++a) {
      std::vector<Poly> f(r);
      f[t] = p2 * Poly::monomial(CycScalar(1, 1L), a);
      gens.push_back(apply(f));
    }
  return Subspace::span(to.dim(), gens);
}

AdelicPoint gw_action_sample(const AdelicPoint& U, const std::vector<std::vector<Poly>>& S, const Poly& q) {
  int m = U.m;
  auto labels = labels_from_dims(U.dimsW);
  size_t r = labels.size();
  if (S.size() != r) throw std::invalid_argument("gw_action_sample: S has the wrong size");
  if (q.is_zero()) throw std::invalid_argument("gw_action_sample: zero denominator");
  for (int i = 0; i <= q.degree(); ++i)
    if (!q.coeffs()[i].is_zero() && mod(i - q.degree(), m) != 0)
      throw std::invalid_argument("gw_action_sample: denominator is not Gamma-semi-invariant");
  BiMatrix B(r, std::vector<BiPoly>(r));
  for (size_t t2 = 0; t2 < r; ++t2) {
    if (S[t2].size() != r) throw std::invalid_argument("gw_action_sample: S has the wrong size");
    for (size_t t = 0; t < r; ++t) {
      const Poly& f = S[t2][t];
      for (int a = 0; a <= f.degree(); ++a) {
        if (f.coeffs()[a].is_zero()) continue;
        if (mod(labels[t2] - a - labels[t], m) != 0)
          throw std::invalid_argument("gw_action_sample: S is not Gamma-equivariant");
        B[t2][t] = B[t2][t] + BiPoly::term(f.coeffs()[a], a, 0);
      }
    }
  }
  Poly det = bi_determinant(B).at_z1();
  if (det.is_zero()) throw std::invalid_argument("gw_action_sample: S is not invertible");
  AdelicPoint out{m, U.tau, U.dimsW, U.p * q * det, Subspace()};
  std::vector<std::vector<Poly>> A(r, std::vector<Poly>(r));
  for (size_t t2 = 0; t2 < r; ++t2)
    for (size_t t = 0; t < r; ++t) A[t2][t] = det * S[t2][t];
  out.U = transport(U.model(), U.U, A, out.model());
  return out;
}

}  // namespace nakajima
