#include "nakajima/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nakajima {

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational");
  if (t[0] == '+') t.erase(0, 1);
  auto slash = t.find('/');
  auto valid_int = [](const std::string& u) {
    if (u.empty()) return false;
    size_t i = (u[0] == '-') ? 1 : 0;
    if (i == u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw std::invalid_argument("bad rational: " + s);
    return Rational(mpz_class(t));
  }
  std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("bad rational: " + s);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("root order must be positive");
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex& table_mutex() {
  static std::mutex mu;
  return mu;
}

std::vector<long> compute_cyclotomic(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    const std::vector<long>& den = cyclotomic_polynomial(d);
    int dn = static_cast<int>(num.size()) - 1, dd = static_cast<int>(den.size()) - 1;
    std::vector<long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long c = num[i];  // divisor is monic
      q[i - dd] = c;
      for (int k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
    }
    num = q;
  }
  return num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("root order must be positive");
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(table_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<long> poly = compute_cyclotomic(m);
  std::lock_guard<std::mutex> lock(table_mutex());
  return cache.emplace(m, std::move(poly)).first->second;
}

CycScalar::CycScalar() : m_(1), c_(1) {}

CycScalar::CycScalar(int m) : m_(m), c_(euler_phi(m)) {}

CycScalar::CycScalar(int m, const Rational& r) : m_(m), c_(euler_phi(m)) { c_[0] = r; }

CycScalar::CycScalar(int m, long r) : m_(m), c_(euler_phi(m)) { c_[0] = r; }

CycScalar::CycScalar(int m, std::vector<Rational> coeffs) : m_(m) {
  int phi = euler_phi(m);
  if (static_cast<int>(coeffs.size()) < phi) coeffs.resize(phi);
  reduce(coeffs);
  c_ = std::move(coeffs);
}

void CycScalar::reduce(std::vector<Rational>& poly) const {
  const std::vector<long>& phi_poly = cyclotomic_polynomial(m_);
  int phi = static_cast<int>(phi_poly.size()) - 1;
  for (int i = static_cast<int>(poly.size()) - 1; i >= phi; --i) {
    if (sgn(poly[i]) == 0) continue;
    Rational c = poly[i];
    for (int k = 0; k < phi; ++k)
      if (phi_poly[k] != 0) poly[i - phi + k] -= c * phi_poly[k];
    poly[i] = 0;
  }
  poly.resize(phi);
}

CycScalar CycScalar::zeta_power(int m, long k) {
  long e = ((k % m) + m) % m;
  std::vector<Rational> poly(e + 1);
  poly[e] = 1;
  return CycScalar(m, std::move(poly));
}

bool CycScalar::is_zero() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

CycScalar CycScalar::with_m(int m) const {
  if (m == m_) return *this;
  if (is_rational()) return CycScalar(m, c_[0]);
  if (m % m_ != 0) throw std::invalid_argument("incompatible cyclotomic fields");
  // zeta_{m_} = zeta_m^{m/m_}
  long step = m / m_;
  std::vector<Rational> poly((c_.size() - 1) * step + 1);
  for (size_t k = 0; k < c_.size(); ++k) poly[k * step] = c_[k];
  return CycScalar(m, std::move(poly));
}

void CycScalar::align(CycScalar& other) {
  if (other.m_ == m_) return;
  if (other.is_rational()) {
    other = other.with_m(m_);
  } else if (is_rational() || other.m_ % m_ == 0) {
    *this = with_m(other.m_);
  } else if (m_ % other.m_ == 0) {
    other = other.with_m(m_);
  } else {
    throw std::invalid_argument("incompatible cyclotomic fields");
  }
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (o.m_ != m_) {
    CycScalar t = o;
    align(t);
    return *this += t;
  }
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  if (o.m_ != m_) {
    CycScalar t = o;
    align(t);
    return *this -= t;
  }
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  if (o.m_ != m_) {
    CycScalar t = o;
    align(t);
    return *this *= t;
  }
  if (c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.is_rational()) {
    for (auto& q : c_) q *= o.c_[0];
    return *this;
  }
  size_t n = c_.size();
  std::vector<Rational> prod(2 * n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (size_t j = 0; j < n; ++j)
      if (sgn(o.c_[j]) != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  reduce(prod);
  c_ = std::move(prod);
  return *this;
}

void CycScalar::sub_mul(const CycScalar& a, const CycScalar& b) {
  if (c_.size() == 1 && a.c_.size() == 1 && b.c_.size() == 1) {
    // phi = 1 on all sides: plain rational arithmetic
    if (sgn(a.c_[0]) != 0 && sgn(b.c_[0]) != 0) c_[0] -= a.c_[0] * b.c_[0];
    return;
  }
  if (a.is_zero() || b.is_zero()) return;
  *this -= a * b;
}

void CycScalar::add_mul(const CycScalar& a, const CycScalar& b) {
  if (c_.size() == 1 && a.c_.size() == 1 && b.c_.size() == 1) {
    // phi = 1 on all sides: plain rational arithmetic
    if (sgn(a.c_[0]) != 0 && sgn(b.c_[0]) != 0) c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  if (is_rational()) {
    CycScalar r(m_);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Solve (this * v) = 1 using the multiplication matrix in the power basis.
  size_t n = c_.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (size_t k = 0; k < n; ++k) {
    CycScalar col = *this * zeta_power(m_, static_cast<long>(k));
    for (size_t i = 0; i < n; ++i) a[i][k] = col.c_[i];
  }
  a[0][n] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular multiplication matrix");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (size_t j = col; j <= n; ++j) a[col][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      Rational f = a[i][col];
      for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = a[i][n];
  return CycScalar(m_, std::move(v));
}

CycScalar& CycScalar::operator/=(const CycScalar& o) { return *this *= o.inverse(); }

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
  try {
    CycScalar x = a, y = b;
    x.align(y);
    return x.c_ == y.c_;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool canonical_less(const CycScalar& a, const CycScalar& b) {
  if (a.m_ != b.m_) return a.m_ < b.m_;
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string CycScalar::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << (sgn(c_[i]) > 0 ? "+" : "");
    os << c_[i].get_str();
    if (i > 0) os << "*z" << m_ << "^" << i;
    first = false;
  }
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.to_string(); }

}  // namespace nakajima
