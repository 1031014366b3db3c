#include "nakajima/monad.hpp"

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

bool killed(const QElem::Key& k, LineKill kill) {
  return (kill == LineKill::Z && k[1] > 0) || (kill == LineKill::W && k[3] > 0);
}

std::vector<size_t> with_label(const PieceBasis& B, int label) {
  std::vector<size_t> out;
  for (size_t i = 0; i < B.items.size(); ++i)
    if (B.items[i].right_label == label) out.push_back(i);
  return out;
}

Matrix submatrix(const Matrix& A, const std::vector<size_t>& rows, const std::vector<size_t>& cols) {
  Matrix S(rows.size(), cols.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols.size(); ++c) S(r, c) = A(rows[r], cols[c]);
  return S;
}

long rank_of(const Matrix& A) { return (A.rows() == 0 || A.cols() == 0) ? 0 : static_cast<long>(rank(A)); }

}  // namespace

PieceBasis piece_basis(const GradedFree& F, int k, int l, int m, LineKill kill) {
  PieceBasis B;
  for (size_t s = 0; s < F.size(); ++s) {
    int I = k + F.twists[s][0], J = l + F.twists[s][1];
    if (I < 0 || J < 0) continue;
    for (int a = 0; a <= I; ++a)
      for (int c = 0; c <= J; ++c) {
        QElem::Key key{a, I - a, c, J - c};
        if (killed(key, kill)) continue;
        B.index[{s, key}] = B.items.size();
        B.items.push_back({s, key, mod(F.labels[s] - a + c, m)});
      }
  }
  return B;
}

QMatrix::QMatrix(TauPtr c, GradedFree s, GradedFree d) : src(std::move(s)), dst(std::move(d)), ctx(std::move(c)) {
  if (ctx) e.assign(dst.size(), std::vector<QElem>(src.size(), QElem(ctx)));
}

void QMatrix::set(size_t t, size_t s, const QElem& q) { e[t][s] = q.times_idempotent(src.labels[s]); }

bool QMatrix::is_zero() const {
  for (const auto& row : e)
    for (const auto& q : row)
      if (!q.is_zero()) return false;
  return true;
}

bool QMatrix::is_equivariant() const {
  int m = ctx->m();
  for (size_t t = 0; t < dst.size(); ++t)
    for (size_t s = 0; s < src.size(); ++s)
      for (const auto& [k, g] : e[t][s].terms()) {
        for (int j = 0; j < m; ++j)
          if (j != mod(src.labels[s], m) && !g.char_value(j).is_zero()) return false;
        if (mod(src.labels[s] + label_shift(k) - dst.labels[t], m) != 0) return false;
        if (k[0] + k[1] != dst.twists[t][0] - src.twists[s][0] || k[2] + k[3] != dst.twists[t][1] - src.twists[s][1])
          return false;
      }
  return true;
}

Matrix QMatrix::evaluate(int k, int l, LineKill kill) const {
  int m = ctx->m();
  PieceBasis S = piece_basis(src, k, l, m, kill), D = piece_basis(dst, k, l, m, kill);
  Matrix A(D.items.size(), S.items.size());
  for (size_t r = 0; r < A.rows(); ++r)
    for (size_t c = 0; c < A.cols(); ++c) A(r, c) = CycScalar(m);
  for (size_t col = 0; col < S.items.size(); ++col) {
    const auto& it = S.items[col];
    QElem q = QElem::monomial(ctx, it.mono, idempotent(m, it.right_label));
    for (size_t t = 0; t < dst.size(); ++t) {
      if (e[t][it.gen].is_zero()) continue;
      QElem prod = e[t][it.gen] * q;
      for (const auto& [key, g] : prod.terms()) {
        if (killed(key, kill)) continue;
        // v_t (x) mono g = chi_{label(t) - a + c}(g) v_t (x) mono.
        const CycScalar& val = g.char_value(dst.labels[t] - key[0] + key[2]);
        if (val.is_zero()) continue;
        auto f = D.index.find({t, key});
        if (f == D.index.end()) throw std::logic_error("QMatrix entry has the wrong bidegree");
        A(f->second, col) += val;
      }
    }
  }
  return A;
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  for (size_t t = 0; t < dst.size(); ++t) {
    os << "[";
    for (size_t s = 0; s < src.size(); ++s) os << (s ? " | " : "") << e[t][s].to_string();
    os << "]\n";
  }
  return os.str();
}

QMatrix compose(const QMatrix& B, const QMatrix& A) {
  if (B.src.size() != A.dst.size()) throw std::invalid_argument("compose: size mismatch");
  QMatrix C(A.ctx, A.src, B.dst);
  for (size_t u = 0; u < B.dst.size(); ++u)
    for (size_t s = 0; s < A.src.size(); ++s) {
      QElem acc(A.ctx);
      for (size_t t = 0; t < A.dst.size(); ++t)
        if (!B.e[u][t].is_zero() && !A.e[t][s].is_zero()) acc = acc + B.e[u][t] * A.e[t][s];
      C.e[u][s] = acc;
    }
  return C;
}

QElem bipoly_to_q(const TauPtr& ctx, const BiPoly& p) {
  QElem q(ctx);
  int m = ctx->m();
  for (const auto& [k, c] : p.terms()) q.add_term({k.first, k.second, 0, 0}, GroupAlgElem::scalar(m, c));
  return q;
}

MonadData build_monad(const QuiverData& d) {
  d.validate();
  Matrix defect = moment_defect(d);
  if (!defect.is_zero()) throw std::invalid_argument("moment map defect is nonzero:\n" + defect.to_string());
  MonadData M{d, make_tau(d.tau), {}, {}, {}, QMatrix(nullptr, {}, {}), QMatrix(nullptr, {}, {})};
  int m = d.m;
  auto vl = d.v_labels(), wl = d.w_labels();
  size_t n = vl.size(), r = wl.size();
  for (int L : vl) M.source.append(L, {-1, -1});
  for (int L : vl) M.middle.append(mod(L + 1, m), {0, -1});
  for (int L : vl) M.middle.append(mod(L - 1, m), {-1, 0});
  for (int L : wl) M.middle.append(L, {0, 0});
  for (int L : vl) M.target.append(L, {0, 0});
  const TauPtr& ctx = M.ctx;
  QElem x = QElem::x(ctx), y = QElem::y(ctx), z = QElem::z(ctx), w = QElem::w(ctx), zw = z * w;
  Matrix B1 = d.full_B1(), B2 = d.full_B2(), I = d.full_I(), J = d.full_J();
  M.a = QMatrix(ctx, M.source, M.middle);
  M.b = QMatrix(ctx, M.middle, M.target);
  for (size_t t = 0; t < n; ++t)
    for (size_t s = 0; s < n; ++s) {
      QElem e1 = z * B1(t, s), e2 = w * B2(t, s);
      if (t == s) {
        e1 = e1 - x;
        e2 = e2 - y;
      }
      M.a.set(t, s, e1);
      M.a.set(n + t, s, e2);
      M.b.set(t, s, -e2);
      M.b.set(t, n + s, e1);
    }
  for (size_t wi = 0; wi < r; ++wi)
    for (size_t s = 0; s < n; ++s) {
      M.a.set(2 * n + wi, s, zw * J(wi, s));
      M.b.set(s, 2 * n + wi, QElem::scalar(ctx, I(s, wi)));
    }
  return M;
}

bool monad_identity_holds(const MonadData& M) { return compose(M.b, M.a).is_zero(); }

MonadDims monad_cohomology_dims(const MonadData& M, int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("monad_cohomology_dims needs k, l >= 0");
  Matrix A = M.a.evaluate(k, l), B = M.b.evaluate(k, l);
  MonadDims r;
  r.source = static_cast<long>(A.cols());
  r.middle_total = static_cast<long>(A.rows());
  r.target = static_cast<long>(B.rows());
  r.rank_a = rank_of(A);
  r.rank_b = rank_of(B);
  r.ker_a = r.source - r.rank_a;
  r.middle = r.middle_total - r.rank_a - r.rank_b;
  r.coker_b = r.target - r.rank_b;
  return r;
}

FramingReport h1_framing_check(const MonadData& M) {
  FramingReport rep;
  int m = M.ctx->m();
  const std::array<std::array<int, 2>, 4> twists = {{{0, 0}, {-1, 0}, {0, -1}, {-1, -1}}};
  const GradedFree* terms[3] = {&M.source, &M.middle, &M.target};
  const QMatrix* maps[2] = {&M.a, &M.b};
  for (size_t ti = 0; ti < twists.size(); ++ti) {
    int s = twists[ti][0], t = twists[ti][1];
    // E_1^{a,q} = H^q of term a (a = 0, 1, 2 for source, middle, target).
    long E1[3][3] = {};
    for (int a = 0; a < 3; ++a)
      for (int q = 0; q < 3; ++q)
        for (size_t g = 0; g < terms[a]->size(); ++g)
          E1[a][q] += coh_dim(q, s + terms[a]->twists[g][0], t + terms[a]->twists[g][1], m).dim / m;
    long rk[2][3] = {};
    for (int a = 0; a < 2; ++a)
      for (int q = 0; q < 3; ++q) {
        if (E1[a][q] == 0 || E1[a + 1][q] == 0) continue;
        if (q != 0) throw std::runtime_error("framing check: unsupported differential on higher cohomology");
        rk[a][q] = rank_of(maps[a]->evaluate(s, t));
      }
    long E2[3][3];
    for (int a = 0; a < 3; ++a)
      for (int q = 0; q < 3; ++q) E2[a][q] = E1[a][q] - (a < 2 ? rk[a][q] : 0) - (a > 0 ? rk[a - 1][q] : 0);
    for (int q = 1; q < 3; ++q)
      if (E2[0][q] != 0 && E2[2][q - 1] != 0)
        throw std::runtime_error("framing check: unsupported second differential");
    // The monad sits in degrees -1, 0, 1.
    for (int deg = 0; deg < 3; ++deg) {
      long h = 0;
      for (int a = 0; a < 3; ++a) {
        int q = deg - (a - 1);
        if (q >= 0 && q < 3) h += E2[a][q];
      }
      rep.h[ti][deg] = h;
    }
  }
  long n = M.quiver.n(), r = M.quiver.r();
  for (size_t ti = 0; ti < 4; ++ti)
    if (rep.h[ti][2] != 0 || (ti > 0 && rep.h[ti][0] != 0)) rep.vanishing_ok = false;
  rep.h1_equals_v = rep.h[3][1] == n;
  rep.framing_sequence_ok = rep.h[0][0] - r + n - rep.h[0][1] == 0;
  if (!rep.ok()) {
    std::ostringstream os;
    for (size_t ti = 0; ti < 4; ++ti)
      os << "(" << twists[ti][0] << "," << twists[ti][1] << "): " << rep.h[ti][0] << " " << rep.h[ti][1] << " "
         << rep.h[ti][2] << "; ";
    rep.detail = os.str();
  }
  return rep;
}

bool LineReport::ok() const {
  for (const auto& r : rows)
    if (r.middle != r.expected || !r.injective || !r.surjective || !r.characters_match) return false;
  return true;
}

LineReport restrict_to_line(const MonadData& M, LineKill which, int max_degree, int max_other) {
  if (which == LineKill::None) throw std::invalid_argument("restrict_to_line needs a line");
  int m = M.ctx->m();
  LineReport rep;
  auto wl = M.quiver.w_labels();
  for (int other = 1; other <= max_other; ++other)
    for (int deg = 0; deg <= max_degree; ++deg) {
      int k = which == LineKill::Z ? other : deg, l = which == LineKill::Z ? deg : other;
      Matrix A = M.a.evaluate(k, l, which), B = M.b.evaluate(k, l, which);
      PieceBasis S = piece_basis(M.source, k, l, m, which), Mi = piece_basis(M.middle, k, l, m, which),
                 T = piece_basis(M.target, k, l, m, which);
      LineReport::Row row;
      row.k = other;
      row.degree = deg;
      long ra = rank_of(A), rb = rank_of(B);
      row.injective = ra == static_cast<long>(S.items.size());
      row.surjective = rb == static_cast<long>(T.items.size());
      row.middle = static_cast<long>(Mi.items.size()) - ra - rb;
      row.expected = static_cast<long>(wl.size()) * (deg + 1);
      for (int rho = 0; rho < m; ++rho) {
        auto s = with_label(S, rho), mi = with_label(Mi, rho), t = with_label(T, rho);
        long mid = static_cast<long>(mi.size()) - rank_of(submatrix(A, mi, s)) - rank_of(submatrix(B, t, mi));
        // W (x) O restricted: monomials x^k y^c w^{l-c} (z-line) or x^a z^{k-a} y^l (w-line).
        long expect = 0;
        for (int L : wl)
          for (int e = 0; e <= deg; ++e) {
            int lab = which == LineKill::Z ? L - k + e : L - e + l;
            if (mod(lab, m) == rho) ++expect;
          }
        if (mid != expect) row.characters_match = false;
      }
      rep.rows.push_back(row);
    }
  return rep;
}

TrivializationPair build_trivialization(const MonadData& M) {
  const QuiverData& d = M.quiver;
  int m = d.m, n = d.n();
  const TauPtr& ctx = M.ctx;
  Matrix B1 = d.full_B1(), I = d.full_I(), J = d.full_J();
  BiMatrix X(n, std::vector<BiPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      X[i][j] = BiPoly::term(-B1(i, j), 0, 1);
      if (i == j) X[i][j] = X[i][j] + BiPoly::x();
    }
  TrivializationPair T{bi_determinant(X), {}, n, mod(-n, m), QMatrix(nullptr, {}, {}), QMatrix(nullptr, {}, {})};
  BiPoly xs = BiPoly::term(CycScalar(m, 1L), T.s, 0);
  T.P_prime = T.P * xs;
  BiMatrix adj = n > 0 ? bi_adjugate(X) : BiMatrix{};
  auto wl = d.w_labels();
  size_t r = wl.size();
  int np = n + T.s;
  GradedFree Wsrc, Wdst;
  for (int L : wl) {
    Wsrc.append(L, {-np, 0});
    Wdst.append(L, {np, 0});
  }
  T.Phi = QMatrix(ctx, Wsrc, M.middle);
  T.Psi = QMatrix(ctx, M.middle, Wdst);
  QElem zw = QElem::z(ctx) * QElem::w(ctx);
  for (size_t wi = 0; wi < r; ++wi) {
    T.Phi.set(2 * n + wi, wi, bipoly_to_q(ctx, T.P_prime));
    T.Psi.set(wi, 2 * n + wi, bipoly_to_q(ctx, T.P_prime));
    for (int t = 0; t < n; ++t) {
      BiPoly adjI, Jadj;
      for (int i = 0; i < n; ++i) {
        adjI = adjI + adj[t][i] * BiPoly::constant(I(i, wi));
        Jadj = Jadj + adj[i][t] * BiPoly::constant(J(wi, i));
      }
      T.Phi.set(n + t, wi, bipoly_to_q(ctx, adjI * xs));
      T.Psi.set(wi, t, bipoly_to_q(ctx, Jadj * xs) * zw);
    }
  }
  return T;
}

TrivializationReport check_trivialization(const MonadData& M, const TrivializationPair& T, int max_k, int max_l) {
  TrivializationReport rep;
  int m = M.ctx->m();
  std::ostringstream why;
  rep.normalized = T.P_prime.eval(CycScalar(m, 1L), CycScalar(m)).is_one();
  if (!T.Phi.is_equivariant() || !T.Psi.is_equivariant()) {
    rep.pointwise_ok = false;
    why << "trivialization maps are not equivariant; ";
  }
  rep.b_phi_zero = compose(M.b, T.Phi).is_zero();
  rep.psi_a_zero = compose(T.Psi, M.a).is_zero();
  QMatrix P2(M.ctx, T.Phi.src, T.Psi.dst);
  for (size_t i = 0; i < P2.src.size(); ++i) P2.set(i, i, bipoly_to_q(M.ctx, T.P_prime * T.P_prime));
  QMatrix comp = compose(T.Psi, T.Phi);
  for (size_t t = 0; t < P2.dst.size(); ++t)
    for (size_t s = 0; s < P2.src.size(); ++s)
      if (comp.e[t][s] != P2.e[t][s]) rep.composite_is_p2 = false;
  for (int k = 0; k <= max_k; ++k)
    for (int l = 0; l <= max_l; ++l) {
      Matrix a = M.a.evaluate(k, l), b = M.b.evaluate(k, l);
      Matrix phi = T.Phi.evaluate(k, l), psi = T.Psi.evaluate(k, l), p2 = P2.evaluate(k, l);
      bool ok = true;
      if (b.rows() && phi.cols() && !(b * phi).is_zero()) ok = false;
      if (psi.rows() && a.cols() && !(psi * a).is_zero()) ok = false;
      if (psi.rows() && phi.cols() && psi * phi != p2) ok = false;
      if (!ok) {
        rep.pointwise_ok = false;
        why << "pointwise identity fails at (" << k << "," << l << "); ";
      }
    }
  // z : C_{k,l} -> C_{k+1,l}, C = coker(Psi on ker b).
  int np = T.n + T.s;
  GradedFree W0 = T.Psi.dst, W1;
  for (size_t i = 0; i < W0.size(); ++i) W1.append(W0.labels[i], {np + 1, 0});
  QMatrix Z(M.ctx, W0, W1);
  for (size_t i = 0; i < W0.size(); ++i) Z.set(i, i, QElem::z(M.ctx));
  for (int l = 1; l <= max_l; ++l) {
    auto image_at = [&](int k) {
      Matrix b = M.b.evaluate(k, l), psi = T.Psi.evaluate(k, l);
      Subspace ker = b.rows() ? kernel_space(b) : Subspace::full(b.cols());
      return ker.image(psi);
    };
    Subspace U = image_at(1);
    for (int k = 1; k < max_k; ++k) {
      Subspace U2 = image_at(k + 1);
      Matrix z = Z.evaluate(k, l);
      bool ok = U2.contains(U.image(z)) && preimage(z, U2) == U &&
                z.rows() - U2.dim() == z.cols() - U.dim();
      if (!ok) {
        rep.z_isomorphism = false;
        why << "z is not an isomorphism on the cokernel at (" << k << "," << l << "); ";
      }
      U = std::move(U2);
    }
  }
  rep.detail = why.str();
  return rep;
}

}  // namespace nakajima
