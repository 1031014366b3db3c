#include "nakajima/quiver.hpp"

#include <random>
#include <stdexcept>

namespace nakajima {

namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

int QuiverData::n() const {
  int s = 0;
  for (int v : dimsV) s += v;
  return s;
}

int QuiverData::r() const {
  int s = 0;
  for (int v : dimsW) s += v;
  return s;
}

int QuiverData::v_offset(int i) const {
  int s = 0;
  for (int k = 0; k < mod(i, m); ++k) s += dimsV[k];
  return s;
}

int QuiverData::w_offset(int i) const {
  int s = 0;
  for (int k = 0; k < mod(i, m); ++k) s += dimsW[k];
  return s;
}

namespace {

// Places blocks[i] : S_i -> T_{i+step} into a full matrix.
Matrix assemble(const QuiverData& d, const std::vector<Matrix>& blocks, bool src_is_v, bool dst_is_v, int step) {
  int rows = dst_is_v ? d.n() : d.r(), cols = src_is_v ? d.n() : d.r();
  Matrix M(rows, cols);
  for (int i = 0; i < d.m; ++i) {
    int so = src_is_v ? d.v_offset(i) : d.w_offset(i);
    int to = dst_is_v ? d.v_offset(i + step) : d.w_offset(i + step);
    const Matrix& b = blocks[i];
    for (size_t r = 0; r < b.rows(); ++r)
      for (size_t c = 0; c < b.cols(); ++c) M(to + r, so + c) += b(r, c);
  }
  return M;
}

}  // namespace

Matrix QuiverData::full_B1() const { return assemble(*this, B1, true, true, -1); }
Matrix QuiverData::full_B2() const { return assemble(*this, B2, true, true, 1); }
Matrix QuiverData::full_I() const { return assemble(*this, I, false, true, 0); }
Matrix QuiverData::full_J() const { return assemble(*this, J, true, false, 0); }

Matrix QuiverData::tau_on_V() const {
  Matrix T(n(), n());
  auto lab = v_labels();
  for (size_t i = 0; i < lab.size(); ++i) T(i, i) = tau.char_value(lab[i]);
  return T;
}

std::vector<int> QuiverData::v_labels() const {
  std::vector<int> out;
  for (int i = 0; i < m; ++i) out.insert(out.end(), dimsV[i], i);
  return out;
}

std::vector<int> QuiverData::w_labels() const {
  std::vector<int> out;
  for (int i = 0; i < m; ++i) out.insert(out.end(), dimsW[i], i);
  return out;
}

void QuiverData::validate() const {
  auto fail = [](const std::string& s) { throw std::invalid_argument("quiver data: " + s); };
  if (m < 1) fail("m must be positive");
  if (tau.m() != m) fail("tau has the wrong order");
  if (static_cast<int>(dimsV.size()) != m || static_cast<int>(dimsW.size()) != m) fail("dimension vectors need m entries");
  for (int i = 0; i < m; ++i)
    if (dimsV[i] < 0 || dimsW[i] < 0) fail("negative dimension");
  if (static_cast<int>(B1.size()) != m || static_cast<int>(B2.size()) != m || static_cast<int>(I.size()) != m ||
      static_cast<int>(J.size()) != m)
    fail("each map needs m blocks");
  for (int i = 0; i < m; ++i) {
    auto shape = [&](const Matrix& b, int rows, int cols, const char* name) {
      if (static_cast<int>(b.rows()) != rows || static_cast<int>(b.cols()) != cols)
        fail(std::string(name) + " block " + std::to_string(i) + " has the wrong shape");
    };
    shape(B1[i], dimsV[mod(i - 1, m)], dimsV[i], "B1");
    shape(B2[i], dimsV[mod(i + 1, m)], dimsV[i], "B2");
    shape(I[i], dimsV[i], dimsW[i], "I");
    shape(J[i], dimsW[i], dimsV[i], "J");
  }
}

QuiverData zero_quiver(const GroupAlgElem& tau, const std::vector<int>& dimsV, const std::vector<int>& dimsW) {
  QuiverData d;
  d.m = tau.m();
  d.tau = tau;
  d.dimsV = dimsV;
  d.dimsW = dimsW;
  int m = d.m;
  if (static_cast<int>(dimsV.size()) != m || static_cast<int>(dimsW.size()) != m)
    throw std::invalid_argument("dimension vectors need m entries");
  for (int i = 0; i < m; ++i) {
    d.B1.emplace_back(dimsV[mod(i - 1, m)], dimsV[i]);
    d.B2.emplace_back(dimsV[mod(i + 1, m)], dimsV[i]);
    d.I.emplace_back(dimsV[i], dimsW[i]);
    d.J.emplace_back(dimsW[i], dimsV[i]);
  }
  // Matrix(rows, cols) fills with the default scalar; lift it to Q(zeta_m).
  auto lift = [m](Matrix& M) {
    for (size_t r = 0; r < M.rows(); ++r)
      for (size_t c = 0; c < M.cols(); ++c) M(r, c) = CycScalar(m);
  };
  for (auto* v : {&d.B1, &d.B2, &d.I, &d.J})
    for (auto& M : *v) lift(M);
  return d;
}

Matrix moment_defect(const QuiverData& d) {
  Matrix B1 = d.full_B1(), B2 = d.full_B2();
  return B1 * B2 - B2 * B1 + d.full_I() * d.full_J() - d.tau_on_V();
}

bool is_admissible(const QuiverData& d) { return moment_defect(d).is_zero(); }

StabilityResult is_stable(const QuiverData& d) {
  size_t n = d.n();
  Matrix B1 = d.full_B1(), B2 = d.full_B2(), I = d.full_I();
  Subspace S(n);
  std::vector<Vec> frontier;
  for (size_t c = 0; c < I.cols(); ++c)
    if (S.add(I.col(c))) frontier.push_back(I.col(c));
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const Matrix* B : {&B1, &B2}) {
        Vec w = B->apply(v);
        if (S.add(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  StabilityResult res;
  res.stable = S.dim() == n;
  res.closure = std::move(S);
  return res;
}

Matrix block_diagonal(const std::vector<Matrix>& g) {
  size_t n = 0;
  for (const auto& b : g) n += b.rows();
  Matrix M(n, n);
  size_t off = 0;
  for (const auto& b : g) {
    if (b.rows() != b.cols()) throw std::invalid_argument("gauge blocks must be square");
    for (size_t r = 0; r < b.rows(); ++r)
      for (size_t c = 0; c < b.cols(); ++c) M(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return M;
}

QuiverData gauge_apply(const std::vector<Matrix>& g, const QuiverData& d) {
  if (static_cast<int>(g.size()) != d.m) throw std::invalid_argument("gauge element needs m blocks");
  std::vector<Matrix> ginv;
  for (int i = 0; i < d.m; ++i) {
    if (static_cast<int>(g[i].rows()) != d.dimsV[i]) throw std::invalid_argument("gauge block has the wrong size");
    auto inv = inverse(g[i]);
    if (!inv) throw std::invalid_argument("singular gauge block " + std::to_string(i));
    ginv.push_back(*inv);
  }
  QuiverData e = d;
  for (int i = 0; i < d.m; ++i) {
    e.B1[i] = g[mod(i - 1, d.m)] * d.B1[i] * ginv[i];
    e.B2[i] = g[mod(i + 1, d.m)] * d.B2[i] * ginv[i];
    e.I[i] = g[i] * d.I[i];
    e.J[i] = d.J[i] * ginv[i];
  }
  return e;
}

int stabilizer_dimension(const QuiverData& d) {
  int m = d.m;
  size_t n = d.n(), r = d.r();
  Matrix B1 = d.full_B1(), B2 = d.full_B2(), I = d.full_I(), J = d.full_J();
  // Unknowns: entries of the diagonal blocks X_i.
  std::vector<std::pair<size_t, size_t>> unknowns;
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < d.dimsV[i]; ++a)
      for (int b = 0; b < d.dimsV[i]; ++b) unknowns.push_back({d.v_offset(i) + a, d.v_offset(i) + b});
  size_t eqs = 2 * n * n + n * r + r * n;
  Matrix A(eqs, unknowns.size());
  for (size_t u = 0; u < unknowns.size(); ++u) {
    Matrix X(n, n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) X(a, b) = CycScalar(m);
    X(unknowns[u].first, unknowns[u].second) = CycScalar(m, 1L);
    std::vector<Matrix> parts = {X * B1 - B1 * X, X * B2 - B2 * X, X * I, J * X};
    size_t row = 0;
    for (const auto& P : parts)
      for (size_t a = 0; a < P.rows(); ++a)
        for (size_t b = 0; b < P.cols(); ++b) A(row++, u) = P(a, b);
  }
  return static_cast<int>(kernel(A).size());
}

std::vector<CycScalar> fingerprints(const QuiverData& d, int max_len) {
  Matrix B1 = d.full_B1(), B2 = d.full_B2(), I = d.full_I(), J = d.full_J();
  std::vector<CycScalar> out;
  std::vector<Matrix> level = {Matrix::identity(d.n())};
  auto emit = [&](const Matrix& W, bool with_trace) {
    if (with_trace) {
      CycScalar t(d.m);
      for (size_t i = 0; i < W.rows(); ++i) t += W(i, i);
      out.push_back(t);
    }
    Matrix JWI = J * W * I;
    for (size_t a = 0; a < JWI.rows(); ++a)
      for (size_t b = 0; b < JWI.cols(); ++b) out.push_back(JWI(a, b));
  };
  emit(level[0], false);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Matrix> next;
    for (const auto& W : level) {
      next.push_back(B1 * W);
      next.push_back(B2 * W);
    }
    for (const auto& W : next) emit(W, true);
    level = std::move(next);
  }
  return out;
}

Poly b1_characteristic_polynomial(const QuiverData& d) {
  size_t n = d.n();
  Matrix B1 = d.full_B1();
  BiMatrix A(n, std::vector<BiPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      A[i][j] = BiPoly::constant(-B1(i, j));
      if (i == j) A[i][j] = A[i][j] + BiPoly::x();
    }
  Poly p = bi_determinant(A).at_z1();
  return p.is_zero() ? Poly::constant(CycScalar(d.m, 1L)) : p;
}

QuiverData generate_cm(int n, const CycScalar& tau) {
  if (n < 1) throw std::invalid_argument("generate_cm needs n >= 1");
  if (tau.is_zero()) throw std::invalid_argument("generate_cm needs tau != 0");
  QuiverData d = zero_quiver(GroupAlgElem::scalar(1, tau.with_m(1)), {n}, {1});
  CycScalar t = tau.with_m(1);
  for (int i = 0; i < n; ++i) {
    d.B1[0](i, i) = CycScalar(1, static_cast<long>(i));
    d.I[0](i, 0) = CycScalar(1, 1L);
    d.J[0](0, i) = t;
    for (int j = 0; j < n; ++j)
      if (i != j) d.B2[0](i, j) = t * CycScalar(1, Rational(1, j - i > 0 ? j - i : i - j)) * CycScalar(1, j > i ? 1L : -1L);
  }
  return d;
}

CyclicGenResult generate_cyclic(const std::vector<int>& dimsV, const std::vector<int>& dimsW, const GroupAlgElem& tau,
                                uint64_t seed, int attempts,
                                const std::function<bool(const QuiverData&)>& accept) {
  CyclicGenResult res;
  int m = tau.m();
  QuiverData base = zero_quiver(tau, dimsV, dimsW);
  if (base.n() == 0) {
    res.data = base;
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-2, 2);
  auto rnd = [&] { return CycScalar(m, static_cast<long>(dist(rng))); };
  size_t n = base.n();
  // Unknown slots of B2 and J, as (is_J, block, row, col).
  struct Slot {
    bool is_j;
    int block, row, col;
  };
  std::vector<Slot> slots;
  for (int i = 0; i < m; ++i) {
    for (size_t a = 0; a < base.B2[i].rows(); ++a)
      for (size_t b = 0; b < base.B2[i].cols(); ++b) slots.push_back({false, i, int(a), int(b)});
    for (size_t a = 0; a < base.J[i].rows(); ++a)
      for (size_t b = 0; b < base.J[i].cols(); ++b) slots.push_back({true, i, int(a), int(b)});
  }
  for (int att = 1; att <= attempts; ++att) {
    res.attempts_used = att;
    QuiverData d = base;
    for (int i = 0; i < m; ++i) {
      for (size_t a = 0; a < d.B1[i].rows(); ++a)
        for (size_t b = 0; b < d.B1[i].cols(); ++b) d.B1[i](a, b) = rnd();
      for (size_t a = 0; a < d.I[i].rows(); ++a)
        for (size_t b = 0; b < d.I[i].cols(); ++b) d.I[i](a, b) = rnd();
    }
    // The defect is affine-linear in (B2, J): A u = tau|_V - 0-part.
    Matrix A(n * n, slots.size());
    Matrix B1 = d.full_B1(), I = d.full_I();
    for (size_t s = 0; s < slots.size(); ++s) {
      QuiverData e = zero_quiver(tau, dimsV, dimsW);
      e.B1 = d.B1;
      e.I = d.I;
      auto& blk = slots[s].is_j ? e.J[slots[s].block] : e.B2[slots[s].block];
      blk(slots[s].row, slots[s].col) = CycScalar(m, 1L);
      Matrix lin = B1 * e.full_B2() - e.full_B2() * B1 + I * e.full_J();
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) A(a * n + b, s) = lin(a, b);
    }
    Matrix T = base.tau_on_V();
    Vec rhs(n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) rhs[a * n + b] = T(a, b);
    auto sol = solve(A, rhs);
    if (!sol) {
      res.failure = "moment map not solvable for the sampled B1, I";
      continue;
    }
    Vec u = *sol;
    for (const auto& k : kernel(A)) u = add(u, scale(k, rnd()));
    for (size_t s = 0; s < slots.size(); ++s) {
      auto& blk = slots[s].is_j ? d.J[slots[s].block] : d.B2[slots[s].block];
      blk(slots[s].row, slots[s].col) = u[s];
    }
    if (!is_admissible(d)) throw std::logic_error("generate_cyclic produced inadmissible data");
    if (!is_stable(d).stable) {
      res.failure = "sampled data is unstable";
      continue;
    }
    if (accept && !accept(d)) {
      res.failure = "sampled data rejected by the caller";
      continue;
    }
    res.data = std::move(d);
    res.failure.clear();
    return res;
  }
  return res;
}

}  // namespace nakajima
