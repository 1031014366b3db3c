#include "nakajima/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nakajima {

Poly::Poly(std::vector<CycScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const CycScalar& c) { return Poly(std::vector<CycScalar>{c}); }

Poly Poly::monomial(const CycScalar& c, int degree) {
  std::vector<CycScalar> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

CycScalar Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return CycScalar();
  return c_[k];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<CycScalar> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<CycScalar> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j].add_mul(c_[i], o.c_[j]);
  }
  return Poly(std::move(r));
}

Poly Poly::operator*(const CycScalar& s) const {
  std::vector<CycScalar> r = c_;
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

Poly Poly::operator-() const {
  std::vector<CycScalar> r = c_;
  for (auto& v : r) v = -v;
  return Poly(std::move(r));
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Poly Poly::pow(int e) const {
  Poly r = constant(CycScalar(1, 1L)), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<CycScalar> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * CycScalar(1, static_cast<long>(i));
  return Poly(std::move(r));
}

CycScalar Poly::eval(const CycScalar& t) const {
  CycScalar r;
  for (size_t i = c_.size(); i-- > 0;) {
    r *= t;
    r += c_[i];
  }
  return r;
}

Matrix Poly::eval(const Matrix& a) const {
  if (a.rows() != a.cols()) throw std::invalid_argument("polynomial of non-square matrix");
  Matrix r(a.rows(), a.cols());
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * a;
    for (size_t k = 0; k < a.rows(); ++k) r(k, k) += c_[i];
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << c_[i];
    if (i > 0) os << "*" << var << "^" << i;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<CycScalar> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<CycScalar> q(a.degree() - db + 1);
  CycScalar inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    CycScalar c = rem[i] * inv;
    q[i - db] = c;
    for (int k = 0; k <= db; ++k) rem[i - db + k].sub_mul(c, b.coeffs()[k]);
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.monic();
  Poly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::domain_error("divisors of zero");
  if (n > mpz_class("1000000000000")) throw std::domain_error("coefficients too large for rational root search");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), large.begin(), large.end());
  return small;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> roots;
  Poly f = p;
  int zero_mult = 0;
  while (f.degree() > 0 && f.coeffs()[0].is_zero()) {
    f = divmod(f, Poly::x()).first;
    ++zero_mult;
  }
  if (zero_mult) roots.push_back({Rational(0), zero_mult});
  if (f.degree() <= 0) return roots;
  // Integer coefficients.
  mpz_class lcm = 1;
  for (const auto& c : f.coeffs()) {
    if (!c.is_rational()) throw std::domain_error("rational root search needs rational coefficients");
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den().get_mpz_t());
  }
  std::vector<mpz_class> ic;
  for (const auto& c : f.coeffs()) ic.push_back(mpz_class(c.rational() * lcm));
  for (const auto& q : positive_divisors(ic.back())) {
    for (const auto& pnum : positive_divisors(ic.front())) {
      for (int sign : {1, -1}) {
        Rational cand(pnum * sign, q);
        cand.canonicalize();
        bool seen = false;
        for (const auto& r : roots) seen = seen || r.first == cand;
        if (seen) continue;
        int mult = 0;
        Poly lin(std::vector<CycScalar>{CycScalar(1, Rational(-cand)), CycScalar(1, 1L)});
        while (f.degree() > 0) {
          auto [qq, rr] = divmod(f, lin);
          if (!rr.is_zero()) break;
          f = qq;
          ++mult;
        }
        if (mult) roots.push_back({cand, mult});
      }
    }
  }
  return roots;
}

BiPoly BiPoly::constant(const CycScalar& c) { return term(c, 0, 0); }
BiPoly BiPoly::x() { return term(CycScalar(1, 1L), 1, 0); }
BiPoly BiPoly::z() { return term(CycScalar(1, 1L), 0, 1); }

BiPoly BiPoly::term(const CycScalar& c, int a, int b) {
  BiPoly p;
  p.add_term({a, b}, c);
  return p;
}

void BiPoly::add_term(const Key& k, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [k1, c1] : t_)
    for (const auto& [k2, c2] : o.t_) r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
  return r;
}

BiPoly BiPoly::operator*(const CycScalar& s) const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.add_term(k, c * s);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

bool BiPoly::operator==(const BiPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto it = o.t_.begin();
  for (const auto& [k, c] : t_) {
    if (k != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

CycScalar BiPoly::eval(const CycScalar& xv, const CycScalar& zv) const {
  CycScalar r;
  for (const auto& [k, c] : t_) {
    CycScalar v = c;
    for (int i = 0; i < k.first; ++i) v *= xv;
    for (int i = 0; i < k.second; ++i) v *= zv;
    r += v;
  }
  return r;
}

Poly BiPoly::at_z1() const {
  int deg = 0;
  for (const auto& [k, c] : t_) deg = std::max(deg, k.first);
  std::vector<CycScalar> v(deg + 1);
  for (const auto& [k, c] : t_) v[k.first] += c;
  return Poly(std::move(v));
}

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    os << c;
    if (k.first) os << "*x^" << k.first;
    if (k.second) os << "*z^" << k.second;
    first = false;
  }
  return os.str();
}

BiPoly bi_determinant(const BiMatrix& a) {
  size_t n = a.size();
  if (n == 0) return BiPoly::constant(CycScalar(1, 1L));
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BiPoly det;
  do {
    BiPoly term = BiPoly::constant(CycScalar(1, 1L));
    bool zero = false;
    for (size_t i = 0; i < n && !zero; ++i) {
      if (a[i][perm[i]].is_zero()) zero = true;
      else term = term * a[i][perm[i]];
    }
    if (zero) continue;
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    det = (inversions % 2) ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

BiMatrix bi_adjugate(const BiMatrix& a) {
  size_t n = a.size();
  BiMatrix adj(n, std::vector<BiPoly>(n));
  if (n == 1) {
    adj[0][0] = BiPoly::constant(CycScalar(1, 1L));
    return adj;
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      BiMatrix minor;
      for (size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<BiPoly> row;
        for (size_t c = 0; c < n; ++c)
          if (c != j) row.push_back(a[r][c]);
        minor.push_back(std::move(row));
      }
      BiPoly cof = bi_determinant(minor);
      adj[j][i] = ((i + j) % 2) ? -cof : cof;
    }
  }
  return adj;
}

}  // namespace nakajima
