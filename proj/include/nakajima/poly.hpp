#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nakajima/cyclotomic.hpp"
#include "nakajima/linalg.hpp"

namespace nakajima {

// Univariate polynomial, lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<CycScalar> coeffs);
  static Poly constant(const CycScalar& c);
  static Poly monomial(const CycScalar& c, int degree);
  static Poly x() { return monomial(CycScalar(1, 1L), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<CycScalar>& coeffs() const { return c_; }
  CycScalar coeff(int k) const;
  const CycScalar& leading() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const CycScalar& s) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;
  Poly derivative() const;
  CycScalar eval(const CycScalar& t) const;
  // Evaluate at a square matrix.
  Matrix eval(const Matrix& a) const;
  Poly monic() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<CycScalar> c_;
};

// Division with remainder by a nonzero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);
// Product of the distinct irreducible factors: p / gcd(p, p').
Poly squarefree_part(const Poly& p);
// Rational roots of a polynomial with rational coefficients, with multiplicity.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

// Commutative polynomial in x and z.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (x-degree, z-degree)
  BiPoly() = default;
  static BiPoly constant(const CycScalar& c);
  static BiPoly x();
  static BiPoly z();
  static BiPoly term(const CycScalar& c, int a, int b);

  const std::map<Key, CycScalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const CycScalar& s) const;
  BiPoly operator-() const;
  bool operator==(const BiPoly& o) const;

  CycScalar eval(const CycScalar& xv, const CycScalar& zv) const;
  // Substitute z = 1.
  Poly at_z1() const;
  std::string to_string() const;

 private:
  void add_term(const Key& k, const CycScalar& c);
  std::map<Key, CycScalar> t_;
};

using BiMatrix = std::vector<std::vector<BiPoly>>;

BiPoly bi_determinant(const BiMatrix& a);
// Transpose of the cofactor matrix: adj(A) A = det(A) Id.
BiMatrix bi_adjugate(const BiMatrix& a);

}  // namespace nakajima
