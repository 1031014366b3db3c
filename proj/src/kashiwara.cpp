#include "nakajima/kashiwara.hpp"

#include <stdexcept>

#include "nakajima/poly.hpp"

namespace nakajima {

namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

Poly p_mu_poly(const CycScalar& mu, int m) {
  if (mu.is_zero()) return Poly::x();
  CycScalar mum(m, 1L);
  for (int i = 0; i < m; ++i) mum *= mu;
  return Poly::monomial(CycScalar(m, 1L), m) - Poly::constant(mum);
}

int m_mu(const CycScalar& mu, int m) { return mu.is_zero() ? 1 : m; }

// Diagonal action of a group algebra element by basis labels.
Matrix group_action(const GroupAlgElem& t, const std::vector<int>& labels) {
  Matrix D(labels.size(), labels.size());
  for (size_t i = 0; i < labels.size(); ++i) D(i, i) = t.char_value(labels[i]);
  return D;
}

Subspace kernel_of_power(const Matrix& P, int e) {
  Matrix A = Matrix::identity(P.rows());
  for (int i = 0; i < e; ++i) A = A * P;
  return kernel_space(A);
}

bool maps_into(const Matrix& A, const Subspace& src, const Subspace& dst) {
  for (const auto& v : src.basis())
    if (!dst.contains(A.apply(v))) return false;
  return true;
}

}  // namespace

int GammaMuModule::dim() const {
  int d = 0;
  for (int v : multiplicities) d += v;
  return d;
}

Matrix p_mu_of(const Matrix& X, const CycScalar& mu, int m) { return p_mu_poly(mu, m).eval(X); }
Matrix p_mu_prime_of(const Matrix& X, const CycScalar& mu, int m) {
  return p_mu_poly(mu, m).derivative().eval(X);
}

TruncatedModule kashiwara_I(const TauPtr& ctx, const CycScalar& mu, const std::vector<int>& u_labels,
                            int bound_y) {
  const GroupAlgElem& tau = ctx->tau();
  int m = tau.m();
  GenericityResult g = is_generic(tau);
  if (!g.generic)
    throw std::invalid_argument("tau is not generic: chi_" + std::to_string(g.j) + "(tau_[" + std::to_string(g.a) +
                                "," + std::to_string(g.b) + "]) = 0");
  if (bound_y < 0) throw std::invalid_argument("negative y-bound");
  TruncatedModule M;
  M.m = m;
  M.bound_y = bound_y;
  // Base vectors: the u's for mu = 0; e_j (x)_C u for mu != 0.
  std::vector<int> base_labels;
  if (mu.is_zero()) {
    for (int c : u_labels) base_labels.push_back(mod(c, m));
  } else {
    for (size_t u = 0; u < u_labels.size(); ++u)
      for (int j = 0; j < m; ++j) base_labels.push_back(j);
  }
  size_t nb = base_labels.size(), n = nb * (bound_y + 1);
  auto idx = [&](int b, size_t s) { return static_cast<size_t>(b) * nb + s; };
  for (int b = 0; b <= bound_y; ++b)
    for (size_t s = 0; s < nb; ++s) {
      M.labels.push_back(mod(base_labels[s] - b, m));
      M.ydeg.push_back(b);
    }
  M.X = Matrix(n, n);
  M.Y = Matrix(n, n);
  for (int b = 0; b <= bound_y; ++b) {
    for (size_t s = 0; s < nb; ++s) {
      size_t col = idx(b, s);
      if (b < bound_y) M.Y(idx(b + 1, s), col) = CycScalar(m, 1L);
      // x y^b = y^b x - y^{b-1} tau_{[1-b,0]}.
      if (b > 0) M.X(idx(b - 1, s), col) -= tau.window(1 - b, 0).char_value(base_labels[s]);
      if (!mu.is_zero()) {
        // x e_j = e_{j+1} x, and x acts on U by mu.
        size_t u = s / m;
        int j = static_cast<int>(s % m);
        M.X(idx(b, u * m + mod(j + 1, m)), col) += mu;
      }
    }
  }
  return M;
}

GammaMuModule kashiwara_K(const TruncatedModule& M, const CycScalar& mu, const GroupAlgElem& tau) {
  (void)tau;
  int m = M.m;
  if (M.bound_y < 1) throw std::invalid_argument("increase truncation: need bound_y >= 1");
  auto kernel_in = [&](int top) {
    // Basis vectors with y-degree <= top span an x-stable subframe.
    std::vector<size_t> keep;
    for (size_t i = 0; i < M.dim(); ++i)
      if (M.ydeg[i] <= top) keep.push_back(i);
    GammaMuModule res;
    auto ker_dim = [&](const std::vector<size_t>& cols) {
      Matrix A(M.dim(), cols.size());
      for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < M.dim(); ++r) {
          A(r, c) = M.X(r, cols[c]);
          if (r == cols[c]) A(r, c) -= mu;
        }
      return static_cast<int>(kernel(A).size());
    };
    if (mu.is_zero()) {
      // X maps label l to label l + 1, so the kernel splits by label.
      res.multiplicities.assign(m, 0);
      for (int l = 0; l < m; ++l) {
        std::vector<size_t> cols;
        for (size_t i : keep)
          if (M.labels[i] == l) cols.push_back(i);
        res.multiplicities[l] = ker_dim(cols);
      }
    } else {
      res.multiplicities = {ker_dim(keep)};
    }
    return res;
  };
  GammaMuModule lo = kernel_in(M.bound_y - 1), hi = kernel_in(M.bound_y);
  if (lo.multiplicities != hi.multiplicities)
    throw std::runtime_error("increase truncation: ker(x - mu) not stable at y-bound " + std::to_string(M.bound_y));
  return hi;
}

PymReport pym_recursion_check(const TruncatedModule& M, const CycScalar& mu, const GroupAlgElem& tau, int k) {
  PymReport rep;
  if (k < 0) return rep;
  if (M.bound_y < k + 1) throw std::invalid_argument("increase truncation: pym check needs bound_y >= k + 1");
  int m = M.m, mm = m_mu(mu, m);
  Matrix P = p_mu_of(M.X, mu, m), Pp = p_mu_prime_of(M.X, mu, m);
  auto T = [&](long lo, long hi) {
    GroupAlgElem s = sum_of_windows(tau, lo, hi, mm) * CycScalar(m, Rational(1, mm));
    return group_action(s, M.labels);
  };
  Subspace km1 = k == 0 ? Subspace(M.dim()) : kernel_of_power(P, k);
  Subspace k0 = kernel_of_power(P, k + 1);
  Subspace k1 = kernel_of_power(P, k + 2);
  Matrix A = P * M.Y + T(0, k) * Pp;
  Matrix B = M.Y * P + T(1, k + 1) * Pp;
  rep.identity_py = maps_into(A, k0, km1);
  rep.identity_yp = maps_into(B, k1, k0);
  // y : M_k -> M_{k+1} bijective.
  Subspace img = k0.sum(k0.image(M.Y));
  rep.y_bijective = k1.contains(img) && img.dim() == k1.dim() && k1.dim() - k0.dim() == k0.dim() - km1.dim();
  if (!rep.ok())
    rep.detail = "pym failure at k=" + std::to_string(k) + (rep.identity_py ? "" : " [p y]") +
                 (rep.identity_yp ? "" : " [y p]") + (rep.y_bijective ? "" : " [y bijectivity]");
  return rep;
}

}  // namespace nakajima
