#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nakajima {

using Rational = mpq_class;

// Always "num/den", also for integers.
std::string rational_to_string(const Rational& q);
// Accepts "num", "num/den" and surrounding whitespace.
Rational parse_rational(const std::string& s);

int euler_phi(int m);

// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int m);

// Element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class CycScalar {
 public:
  CycScalar();
  explicit CycScalar(int m);
  CycScalar(int m, const Rational& r);
  CycScalar(int m, long r);
  // Coefficient vectors longer than phi(m) are reduced.
  CycScalar(int m, std::vector<Rational> coeffs);

  static CycScalar zeta_power(int m, long k);

  int m() const { return m_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Only meaningful when is_rational().
  const Rational& rational() const { return c_[0]; }

  CycScalar inverse() const;
  // Same element viewed in Q(zeta_m) for a compatible m.
  CycScalar with_m(int m) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  // this -= a * b
  void sub_mul(const CycScalar& a, const CycScalar& b);
  void add_mul(const CycScalar& a, const CycScalar& b);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  // Total order used only for canonical sorting.
  friend bool canonical_less(const CycScalar& a, const CycScalar& b);

  std::string to_string() const;

 private:
  void align(CycScalar& other);
  void reduce(std::vector<Rational>& poly) const;

  int m_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& s);

}  // namespace nakajima
