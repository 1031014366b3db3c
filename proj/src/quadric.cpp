#include "nakajima/quadric.hpp"

#include <sstream>
#include <stdexcept>

#include "nakajima/linalg.hpp"
#include "nakajima/rewrite.hpp"

namespace nakajima {

namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

}  // namespace

QElem::QElem(TauPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("QElem needs a tau context");
}

QElem QElem::monomial(TauPtr ctx, const Key& k, const GroupAlgElem& t) {
  QElem e(std::move(ctx));
  e.add_term(k, t);
  return e;
}

QElem QElem::x(TauPtr ctx) {
  int m = ctx->m();
  return monomial(std::move(ctx), {1, 0, 0, 0}, GroupAlgElem::one(m));
}
QElem QElem::z(TauPtr ctx) {
  int m = ctx->m();
  return monomial(std::move(ctx), {0, 1, 0, 0}, GroupAlgElem::one(m));
}
QElem QElem::y(TauPtr ctx) {
  int m = ctx->m();
  return monomial(std::move(ctx), {0, 0, 1, 0}, GroupAlgElem::one(m));
}
QElem QElem::w(TauPtr ctx) {
  int m = ctx->m();
  return monomial(std::move(ctx), {0, 0, 0, 1}, GroupAlgElem::one(m));
}
QElem QElem::group(TauPtr ctx, long k) {
  int m = ctx->m();
  return monomial(std::move(ctx), {0, 0, 0, 0}, GroupAlgElem::group_element(m, k));
}
QElem QElem::scalar(TauPtr ctx, const CycScalar& c) {
  int m = ctx->m();
  return monomial(std::move(ctx), {0, 0, 0, 0}, GroupAlgElem::scalar(m, c));
}

QElem QElem::from_terms(TauPtr ctx, const std::vector<QTerm>& terms) {
  int m = ctx->m();
  QElem e(std::move(ctx));
  for (const auto& t : terms) e.add_term({t.a, t.b, t.c, t.d}, GroupAlgElem::group_element(m, t.g) * t.coef);
  return e;
}

std::vector<QTerm> QElem::group_terms() const {
  std::vector<QTerm> out;
  for (const auto& [k, t] : t_) {
    auto g = t.group_coeffs();
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      if (!g[i].is_zero()) out.push_back({k[0], k[1], k[2], k[3], i, g[i]});
  }
  return out;
}

bool QElem::is_homogeneous() const {
  if (t_.empty()) return true;
  auto k0 = t_.begin()->first;
  for (const auto& [k, t] : t_)
    if (k[0] + k[1] != k0[0] + k0[1] || k[2] + k[3] != k0[2] + k0[3]) return false;
  return true;
}

std::array<int, 2> QElem::bidegree() const {
  if (t_.empty() || !is_homogeneous()) throw std::logic_error("bidegree of a zero or inhomogeneous element");
  auto k = t_.begin()->first;
  return {k[0] + k[1], k[2] + k[3]};
}

void QElem::add_term(const Key& k, const GroupAlgElem& t) {
  for (int e : k)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (t.m() != ctx_->m()) throw std::invalid_argument("group algebra order mismatch");
  if (t.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, t);
    return;
  }
  it->second += t;
  if (it->second.is_zero()) t_.erase(it);
}

QElem QElem::operator+(const QElem& o) const {
  if (!ctx_->same_as(*o.ctx_)) throw std::invalid_argument("QElem operands with different tau");
  QElem r = *this;
  for (const auto& [k, t] : o.t_) r.add_term(k, t);
  return r;
}

QElem QElem::operator-(const QElem& o) const { return *this + (-o); }

QElem QElem::operator-() const {
  QElem r(ctx_);
  for (const auto& [k, t] : t_) r.t_.emplace(k, -t);
  return r;
}

QElem QElem::operator*(const CycScalar& s) const {
  QElem r(ctx_);
  if (s.is_zero()) return r;
  for (const auto& [k, t] : t_) r.t_.emplace(k, t * s);
  return r;
}

QElem QElem::operator*(const QElem& o) const { return q_multiply(*this, o); }

bool QElem::operator==(const QElem& o) const {
  if (!ctx_->same_as(*o.ctx_) || t_.size() != o.t_.size()) return false;
  auto it = o.t_.begin();
  for (const auto& [k, t] : t_) {
    if (k != it->first || t != it->second) return false;
    ++it;
  }
  return true;
}

QElem QElem::times_idempotent(int j) const {
  int m = ctx_->m();
  QElem r(ctx_);
  for (const auto& [k, t] : t_) {
    std::vector<CycScalar> cv(m, CycScalar(m));
    cv[mod(j, m)] = t.char_value(j);
    r.add_term(k, GroupAlgElem::from_charvals(std::move(cv)));
  }
  return r;
}

std::string QElem::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t] : t_) {
    if (!first) os << " + ";
    os << "x^" << k[0] << " z^" << k[1] << " y^" << k[2] << " w^" << k[3] << " " << t.to_string();
    first = false;
  }
  return os.str();
}

QElem q_multiply(const QElem& u, const QElem& v) {
  if (!u.context()->same_as(*v.context())) throw std::invalid_argument("QElem operands with different tau");
  const TauContext& ctx = *u.context();
  QElem r(u.context());
  for (const auto& [ku, s] : u.terms()) {
    for (const auto& [kv, t] : v.terms()) {
      int c = kv[0], g = kv[2];
      GroupAlgElem st = s.shift(c - g) * t;
      const auto& C = ctx.ycommute(ku[2], c);
      for (int j = 0; j < static_cast<int>(C.size()); ++j) {
        if (C[j].is_zero()) continue;
        r.add_term({ku[0] + c - j, ku[1] + kv[1] + j, ku[2] + g - j, ku[3] + kv[3] + j}, C[j].shift(-g) * st);
      }
    }
  }
  return r;
}

QElem q_multiply_by_rewriting(const QElem& u, const QElem& v) {
  if (!u.context()->same_as(*v.context())) throw std::invalid_argument("QElem operands with different tau");
  int m = u.context()->m();
  auto words_of = [](const QElem& e) {
    std::vector<rewrite::Word> out;
    for (const auto& t : e.group_terms()) {
      rewrite::Word w{t.coef, {}};
      w.letters.insert(w.letters.end(), t.a, rewrite::kX);
      w.letters.insert(w.letters.end(), t.b, rewrite::kZ);
      w.letters.insert(w.letters.end(), t.c, rewrite::kY);
      w.letters.insert(w.letters.end(), t.d, rewrite::kW);
      w.letters.push_back(rewrite::kG + t.g);
      out.push_back(std::move(w));
    }
    return out;
  };
  std::vector<rewrite::Word> words;
  for (const auto& a : words_of(u))
    for (const auto& b : words_of(v)) {
      rewrite::Word w{a.coef * b.coef, a.letters};
      w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
      words.push_back(std::move(w));
    }
  auto nf = rewrite::normal_form(std::move(words), m, u.context()->tau().group_coeffs(), true);
  std::vector<QTerm> terms;
  for (const auto& [k, c] : nf) terms.push_back({k[0], k[1], k[2], k[3], k[4], c});
  return QElem::from_terms(u.context(), terms);
}

BElem specialize_to_B(const QElem& u) {
  BElem r(u.context());
  for (const auto& [k, t] : u.terms()) r.add_term(k[0], k[2], t);
  return r;
}

long q_dim(int i, int j, int m) {
  if (i < 0 || j < 0) throw std::invalid_argument("q_dim needs a nonnegative bidegree");
  return static_cast<long>(i + 1) * (j + 1) * m;
}

std::vector<QTerm> q_basis(int i, int j, int m) {
  if (i < 0 || j < 0) return {};
  std::vector<QTerm> out;
  for (int a = 0; a <= i; ++a)
    for (int c = 0; c <= j; ++c)
      for (int g = 0; g < m; ++g) out.push_back({a, i - a, c, j - c, g, CycScalar(m, 1L)});
  return out;
}

namespace {

// Coordinates of a homogeneous element of Q_{i,j} in the basis
// (a, c, character), character coordinates of the group part.
Vec coordinates(const QElem& e, int i, int j, int m) {
  Vec v(static_cast<size_t>(i + 1) * (j + 1) * m, CycScalar(m));
  for (const auto& [k, t] : e.terms()) {
    if (k[0] + k[1] != i || k[2] + k[3] != j) throw std::logic_error("element outside the expected bidegree");
    size_t base = (static_cast<size_t>(k[0]) * (j + 1) + k[2]) * m;
    for (int l = 0; l < m; ++l) v[base + l] = t.char_value(l);
  }
  return v;
}

QElem from_coordinates(const TauPtr& ctx, const Vec& v, int i, int j) {
  int m = ctx->m();
  QElem e(ctx);
  for (int a = 0; a <= i; ++a)
    for (int c = 0; c <= j; ++c) {
      size_t base = (static_cast<size_t>(a) * (j + 1) + c) * m;
      std::vector<CycScalar> cv(v.begin() + base, v.begin() + base + m);
      e.add_term({a, i - a, c, j - c}, GroupAlgElem::from_charvals(std::move(cv)));
    }
  return e;
}

std::vector<QElem> generators(const TauPtr& ctx, int k) {
  std::vector<QElem> out;
  for (int g = 0; g < ctx->m(); ++g) {
    QElem h = QElem::group(ctx, g);
    if (k == 0) {
      out.push_back(QElem::x(ctx) * h);
      out.push_back(QElem::z(ctx) * h);
    } else {
      out.push_back(QElem::y(ctx) * h);
      out.push_back(QElem::w(ctx) * h);
    }
  }
  return out;
}

Subspace products(const TauPtr& ctx, const Subspace& src, int i, int j, int k) {
  int ti = i + (k == 0), tj = j + (k == 1);
  int m = ctx->m();
  Subspace out(static_cast<size_t>(ti + 1) * (tj + 1) * m);
  auto gens = generators(ctx, k);
  for (const auto& b : src.basis()) {
    QElem e = from_coordinates(ctx, b, i, j);
    for (const auto& g : gens) out.add(coordinates(g * e, ti, tj, m));
  }
  return out;
}

}  // namespace

std::vector<std::vector<long>> q_dim_table_by_generation(const TauPtr& ctx, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("q_dim needs a nonnegative bidegree");
  int m = ctx->m();
  // spans[a][c] for the current row.
  std::vector<std::vector<Subspace>> spans(i + 1, std::vector<Subspace>(j + 1));
  for (int a = 0; a <= i; ++a)
    for (int c = 0; c <= j; ++c) {
      if (a == 0 && c == 0) {
        spans[0][0] = Subspace::full(m);
        continue;
      }
      Subspace s(static_cast<size_t>(a + 1) * (c + 1) * m);
      if (a > 0) s = s.sum(products(ctx, spans[a - 1][c], a - 1, c, 0));
      if (c > 0) s = s.sum(products(ctx, spans[a][c - 1], a, c - 1, 1));
      spans[a][c] = std::move(s);
    }
  std::vector<std::vector<long>> dims(i + 1, std::vector<long>(j + 1));
  for (int a = 0; a <= i; ++a)
    for (int c = 0; c <= j; ++c) dims[a][c] = static_cast<long>(spans[a][c].dim());
  return dims;
}

long q_dim_by_generation(const TauPtr& ctx, int i, int j) { return q_dim_table_by_generation(ctx, i, j)[i][j]; }

bool strong_generation_check(const TauPtr& ctx, int i, int j, int k) {
  int m = ctx->m();
  Subspace full = Subspace::full(static_cast<size_t>(i + 1) * (j + 1) * m);
  Subspace img = products(ctx, full, i, j, k);
  return static_cast<long>(img.dim()) == q_dim(i + (k == 0), j + (k == 1), m);
}

CohEntry coh_dim(int p, int i, int j, int m) {
  CohEntry e;
  e.characters.assign(m, 0);
  // Count pairs (a, c) with 0 <= a <= A, 0 <= c <= C, character sign_a*a + sign_c*c + offset.
  auto fill = [&](int A, int C, int sa, int sc, int offset) {
    for (int a = 0; a <= A; ++a)
      for (int c = 0; c <= C; ++c) e.characters[mod(sa * a + sc * c + offset, m)] += m;
    e.dim = static_cast<long>(A + 1) * (C + 1) * m;
  };
  if (p == 0 && i >= 0 && j >= 0) fill(i, j, 1, -1, 0);
  else if (p == 1 && i <= -2 && j >= 0) fill(-2 - i, j, -1, -1, -1);
  else if (p == 1 && i >= 0 && j <= -2) fill(i, -2 - j, 1, 1, 1);
  else if (p == 2 && i <= -2 && j <= -2) fill(-2 - i, -2 - j, -1, 1, 0);
  else if (p < 0 || p > 2) throw std::invalid_argument("cohomological degree must be 0, 1 or 2");
  return e;
}

long euler_characteristic(int i, int j, int m) {
  return coh_dim(0, i, j, m).dim - coh_dim(1, i, j, m).dim + coh_dim(2, i, j, m).dim;
}

}  // namespace nakajima
