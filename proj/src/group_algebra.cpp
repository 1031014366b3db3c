#include "nakajima/group_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace nakajima {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

void check_same(const GroupAlgElem& a, const GroupAlgElem& b) {
  if (a.m() != b.m()) throw std::invalid_argument("group algebra elements of different order");
}

}  // namespace

GroupAlgElem::GroupAlgElem() : m_(1), chi_(1, CycScalar(1)) {}

GroupAlgElem GroupAlgElem::zero(int m) {
  GroupAlgElem t;
  t.m_ = m;
  t.chi_.assign(m, CycScalar(m));
  return t;
}

GroupAlgElem GroupAlgElem::one(int m) { return scalar(m, CycScalar(m, 1L)); }

GroupAlgElem GroupAlgElem::scalar(int m, const CycScalar& c) {
  GroupAlgElem t = zero(m);
  for (auto& v : t.chi_) v = c.with_m(m);
  return t;
}

GroupAlgElem GroupAlgElem::from_charvals(std::vector<CycScalar> charvals) {
  if (charvals.empty()) throw std::invalid_argument("empty character vector");
  GroupAlgElem t;
  t.m_ = static_cast<int>(charvals.size());
  for (auto& v : charvals) v = v.with_m(t.m_);
  t.chi_ = std::move(charvals);
  return t;
}

GroupAlgElem GroupAlgElem::from_group(std::vector<CycScalar> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient vector");
  int m = static_cast<int>(coeffs.size());
  GroupAlgElem t = zero(m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      if (!coeffs[k].is_zero())
        t.chi_[j].add_mul(coeffs[k].with_m(m), CycScalar::zeta_power(m, static_cast<long>(j) * k));
  return t;
}

GroupAlgElem GroupAlgElem::group_element(int m, long k) {
  std::vector<CycScalar> c(m, CycScalar(m));
  c[mod(k, m)] = CycScalar(m, 1L);
  return from_group(std::move(c));
}

const CycScalar& GroupAlgElem::char_value(long j) const { return chi_[mod(j, m_)]; }

std::vector<CycScalar> GroupAlgElem::group_coeffs() const {
  std::vector<CycScalar> c(m_, CycScalar(m_));
  CycScalar inv_m(m_, Rational(1, m_));
  for (int k = 0; k < m_; ++k) {
    for (int j = 0; j < m_; ++j)
      if (!chi_[j].is_zero()) c[k].add_mul(chi_[j], CycScalar::zeta_power(m_, -static_cast<long>(j) * k));
    c[k] *= inv_m;
  }
  return c;
}

GroupAlgElem GroupAlgElem::shift(long k) const {
  GroupAlgElem t = *this;
  for (int j = 0; j < m_; ++j) t.chi_[j] = chi_[mod(j + k, m_)];
  return t;
}

GroupAlgElem GroupAlgElem::window(long a, long b) const {
  if (a > b) throw std::invalid_argument("tau window requires a <= b");
  // Full periods contribute a constant; only the remainder is summed.
  long len = b - a + 1, q = len / m_, s = len % m_;
  GroupAlgElem t = zero(m_);
  CycScalar full = full_period();
  for (int j = 0; j < m_; ++j) {
    CycScalar v = full * CycScalar(m_, q);
    for (long k = 0; k < s; ++k) v += chi_[mod(j + a + k, m_)];
    t.chi_[j] = v;
  }
  return t;
}

CycScalar GroupAlgElem::full_period() const {
  CycScalar s(m_);
  for (const auto& v : chi_) s += v;
  return s;
}

bool GroupAlgElem::is_zero() const {
  for (const auto& v : chi_)
    if (!v.is_zero()) return false;
  return true;
}

bool GroupAlgElem::is_invertible() const {
  for (const auto& v : chi_)
    if (v.is_zero()) return false;
  return true;
}

GroupAlgElem GroupAlgElem::inverse() const {
  GroupAlgElem t = *this;
  for (auto& v : t.chi_) v = v.inverse();
  return t;
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  check_same(*this, o);
  for (int j = 0; j < m_; ++j) chi_[j] += o.chi_[j];
  return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o) {
  check_same(*this, o);
  for (int j = 0; j < m_; ++j) chi_[j] -= o.chi_[j];
  return *this;
}

GroupAlgElem& GroupAlgElem::operator*=(const GroupAlgElem& o) {
  check_same(*this, o);
  for (int j = 0; j < m_; ++j) chi_[j] *= o.chi_[j];
  return *this;
}

GroupAlgElem& GroupAlgElem::operator*=(const CycScalar& c) {
  for (auto& v : chi_) v *= c;
  return *this;
}

GroupAlgElem GroupAlgElem::operator-() const {
  GroupAlgElem t = *this;
  for (auto& v : t.chi_) v = -v;
  return t;
}

bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) {
  if (a.m_ != b.m_) return false;
  for (int j = 0; j < a.m_; ++j)
    if (a.chi_[j] != b.chi_[j]) return false;
  return true;
}

std::string GroupAlgElem::to_string() const {
  std::ostringstream os;
  os << "chi[";
  for (int j = 0; j < m_; ++j) os << (j ? ", " : "") << chi_[j];
  os << "]";
  return os.str();
}

CycScalar char_value(const GroupAlgElem& t, long j) { return t.char_value(j); }
GroupAlgElem tau_shift(const GroupAlgElem& t, long k) { return t.shift(k); }
GroupAlgElem tau_window(const GroupAlgElem& t, long a, long b) { return t.window(a, b); }
bool is_invertible_in_group_algebra(const GroupAlgElem& t) { return t.is_invertible(); }

GroupAlgElem sum_of_windows(const GroupAlgElem& t, long a, long b, long m_mu) {
  if (a > b) throw std::invalid_argument("sum_of_windows requires a <= b");
  if (m_mu < 1) throw std::invalid_argument("sum_of_windows requires m_mu >= 1");
  GroupAlgElem s = GroupAlgElem::zero(t.m());
  for (long i = a; i <= b; ++i) s += t.window(i, i + m_mu - 1);
  return s;
}

GenericityResult is_generic(const GroupAlgElem& t) {
  // chi_j(tau_{[a,b]}) depends on alpha = a + j mod m and the length
  // L = q*m + s; its value is q*|tau| + c_s(alpha) with c_s a partial window.
  int m = t.m();
  CycScalar full = t.full_period();
  GenericityResult res;
  long best_len = -1;
  auto record = [&](long alpha, long len) {
    if (best_len < 0 || len < best_len) {
      best_len = len;
      res.generic = false;
      res.j = alpha;
      res.a = 0;
      res.b = len - 1;
    }
  };
  for (long alpha = 0; alpha < m; ++alpha) {
    CycScalar partial(m);
    for (long s = 0; s < m; ++s) {
      if (s > 0) partial += t.char_value(alpha + s - 1);
      long qmin = (s == 0) ? 1 : 0;
      if (full.is_zero()) {
        // q*|tau| vanishes; value is the partial window for every q >= qmin.
        if (partial.is_zero()) record(alpha, qmin * m + s);
        continue;
      }
      CycScalar ratio = -(partial / full);
      if (!ratio.is_rational()) continue;
      const Rational& q = ratio.rational();
      if (q.get_den() != 1 || q < qmin) continue;
      record(alpha, q.get_num().get_si() * m + s);
    }
  }
  return res;
}

GenericityResult brute_force_generic(const GroupAlgElem& t, long bmax) {
  GenericityResult res;
  for (long a = 0; a <= bmax; ++a) {
    GroupAlgElem acc = GroupAlgElem::zero(t.m());
    for (long b = a; b <= bmax; ++b) {
      acc += t.shift(b);
      for (long j = 0; j < t.m(); ++j) {
        if (acc.char_value(j).is_zero()) {
          res.generic = false;
          res.a = a;
          res.b = b;
          res.j = j;
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace nakajima
