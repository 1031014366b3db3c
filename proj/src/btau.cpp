#include "nakajima/btau.hpp"

#include <sstream>
#include <stdexcept>

#include "nakajima/rewrite.hpp"

namespace nakajima {

TauContext::TauContext(GroupAlgElem tau) : tau_(std::move(tau)) {}

const std::vector<GroupAlgElem>& TauContext::ycommute(int b, int c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(b, c);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  // Fill row by row in b; entries are never erased so references stay valid.
  int m = tau_.m();
  for (int bb = 0; bb <= b; ++bb) {
    auto k = std::make_pair(bb, c);
    if (cache_.count(k)) continue;
    std::vector<GroupAlgElem> row(std::min(bb, c) + 1, GroupAlgElem::zero(m));
    if (bb == 0) {
      row[0] = GroupAlgElem::one(m);
    } else {
      const auto& prev = cache_.at({bb - 1, c});
      for (int j = 0; j <= std::min(bb, c); ++j) {
        if (j < static_cast<int>(prev.size())) row[j] += prev[j];
        if (j >= 1) row[j] += tau_.window(0, c - j).shift(-(bb - j)) * prev[j - 1];
      }
    }
    cache_.emplace(k, std::move(row));
  }
  return cache_.at(key);
}

TauPtr make_tau(const GroupAlgElem& tau) { return std::make_shared<const TauContext>(tau); }

BElem::BElem(TauPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("BElem needs a tau context");
}

BElem BElem::monomial(TauPtr ctx, int a, int b, const GroupAlgElem& t) {
  BElem e(std::move(ctx));
  e.add_term(a, b, t);
  return e;
}

BElem BElem::x(TauPtr ctx) {
  int m = ctx->m();
  return monomial(std::move(ctx), 1, 0, GroupAlgElem::one(m));
}

BElem BElem::y(TauPtr ctx) {
  int m = ctx->m();
  return monomial(std::move(ctx), 0, 1, GroupAlgElem::one(m));
}

BElem BElem::group(TauPtr ctx, long k) {
  int m = ctx->m();
  return monomial(std::move(ctx), 0, 0, GroupAlgElem::group_element(m, k));
}

BElem BElem::scalar(TauPtr ctx, const CycScalar& c) {
  int m = ctx->m();
  return monomial(std::move(ctx), 0, 0, GroupAlgElem::scalar(m, c));
}

BElem BElem::from_terms(TauPtr ctx, const std::vector<BTerm>& terms) {
  int m = ctx->m();
  BElem e(std::move(ctx));
  for (const auto& t : terms) e.add_term(t.a, t.b, GroupAlgElem::group_element(m, t.g) * t.c);
  return e;
}

std::vector<BTerm> BElem::group_terms() const {
  std::vector<BTerm> out;
  for (const auto& [k, t] : t_) {
    auto g = t.group_coeffs();
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      if (!g[i].is_zero()) out.push_back({k.first, k.second, i, g[i]});
  }
  return out;
}

int BElem::filtration_degree() const {
  int d = -1;
  for (const auto& [k, t] : t_) d = std::max(d, k.second);
  return d;
}

void BElem::add_term(int a, int b, const GroupAlgElem& t) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  if (t.m() != ctx_->m()) throw std::invalid_argument("group algebra order mismatch");
  if (t.is_zero()) return;
  auto it = t_.find({a, b});
  if (it == t_.end()) {
    t_.emplace(Key{a, b}, t);
    return;
  }
  it->second += t;
  if (it->second.is_zero()) t_.erase(it);
}

void BElem::check(const BElem& o) const {
  if (!ctx_->same_as(*o.ctx_)) throw std::invalid_argument("BElem operands with different tau");
}

BElem BElem::operator+(const BElem& o) const {
  check(o);
  BElem r = *this;
  for (const auto& [k, t] : o.t_) r.add_term(k.first, k.second, t);
  return r;
}

BElem BElem::operator-(const BElem& o) const { return *this + (-o); }

BElem BElem::operator-() const {
  BElem r(ctx_);
  for (const auto& [k, t] : t_) r.t_.emplace(k, -t);
  return r;
}

BElem BElem::operator*(const CycScalar& s) const {
  BElem r(ctx_);
  if (s.is_zero()) return r;
  for (const auto& [k, t] : t_) r.t_.emplace(k, t * s);
  return r;
}

BElem BElem::operator*(const BElem& o) const { return b_multiply(*this, o); }

bool BElem::operator==(const BElem& o) const {
  if (!ctx_->same_as(*o.ctx_) || t_.size() != o.t_.size()) return false;
  auto it = o.t_.begin();
  for (const auto& [k, t] : t_) {
    if (k != it->first || t != it->second) return false;
    ++it;
  }
  return true;
}

std::string BElem::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, t] : t_) {
    if (!first) os << " + ";
    os << "x^" << k.first << " y^" << k.second << " " << t.to_string();
    first = false;
  }
  return os.str();
}

BElem b_multiply(const BElem& u, const BElem& v) {
  if (!u.context()->same_as(*v.context())) throw std::invalid_argument("BElem operands with different tau");
  const TauContext& ctx = *u.context();
  BElem r(u.context());
  for (const auto& [ku, s] : u.terms()) {
    auto [a, b] = ku;
    for (const auto& [kv, t] : v.terms()) {
      auto [c, d] = kv;
      GroupAlgElem st = s.shift(c - d) * t;
      const auto& C = ctx.ycommute(b, c);
      for (int j = 0; j < static_cast<int>(C.size()); ++j) {
        if (C[j].is_zero()) continue;
        r.add_term(a + c - j, b + d - j, C[j].shift(-d) * st);
      }
    }
  }
  return r;
}

namespace {

std::vector<rewrite::Word> to_words(const BElem& e) {
  std::vector<rewrite::Word> out;
  for (const auto& t : e.group_terms()) {
    rewrite::Word w{t.c, {}};
    w.letters.insert(w.letters.end(), t.a, rewrite::kX);
    w.letters.insert(w.letters.end(), t.b, rewrite::kY);
    w.letters.push_back(rewrite::kG + t.g);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

BElem b_multiply_by_rewriting(const BElem& u, const BElem& v) {
  if (!u.context()->same_as(*v.context())) throw std::invalid_argument("BElem operands with different tau");
  int m = u.context()->m();
  std::vector<rewrite::Word> words;
  for (const auto& wu : to_words(u))
    for (const auto& wv : to_words(v)) {
      rewrite::Word w{wu.coef * wv.coef, wu.letters};
      w.letters.insert(w.letters.end(), wv.letters.begin(), wv.letters.end());
      words.push_back(std::move(w));
    }
  auto nf = rewrite::normal_form(std::move(words), m, u.context()->tau().group_coeffs(), false);
  std::vector<BTerm> terms;
  for (const auto& [k, c] : nf) terms.push_back({k[0], k[2], k[4], c});
  return BElem::from_terms(u.context(), terms);
}

CommutatorCheck commutator_y_pmu(const TauPtr& ctx, const CycScalar& mu) {
  int m = ctx->m();
  GroupAlgElem one = GroupAlgElem::one(m);
  // p as a list of (degree, coefficient).
  std::vector<std::pair<int, CycScalar>> p;
  int m_mu;
  if (mu.is_zero()) {
    p = {{1, CycScalar(m, 1L)}};
    m_mu = 1;
  } else {
    CycScalar mum(m, 1L);
    for (int i = 0; i < m; ++i) mum *= mu;
    p = {{m, CycScalar(m, 1L)}, {0, -mum}};
    m_mu = m;
  }
  BElem pe(ctx);
  for (const auto& [k, c] : p) pe.add_term(k, 0, one * c);
  BElem y = BElem::y(ctx);
  CommutatorCheck res{y * pe - pe * y, BElem(ctx), false};
  // RHS: (window / m_mu) * p'(x), moving the group factor past x^k by hand.
  GroupAlgElem w = ctx->tau().window(0, m_mu - 1) * CycScalar(m, Rational(1, m_mu));
  for (const auto& [k, c] : p) {
    if (k == 0) continue;
    res.rhs.add_term(k - 1, 0, w.shift(k - 1) * (c * CycScalar(m, static_cast<long>(k))));
  }
  res.equal = res.lhs == res.rhs;
  return res;
}

BElem y_action_on_polynomials(const BElem& f) {
  for (const auto& [k, t] : f.terms())
    if (k.second != 0) throw std::invalid_argument("y action expects a polynomial in x");
  BElem prod = BElem::y(f.context()) * f;
  BElem r(f.context());
  for (const auto& [k, t] : prod.terms())
    if (k.second == 0) r.add_term(k.first, 0, t);
  return r;
}

}  // namespace nakajima
