#pragma once

#include <string>
#include <vector>

#include "nakajima/cyclotomic.hpp"

namespace nakajima {

// Element of the group algebra of the cyclic group of order m, stored by its
// character values chi_0, ..., chi_{m-1}.  The generator g^k evaluates to
// zeta_m^{jk} under chi_j.
class GroupAlgElem {
 public:
  GroupAlgElem();
  static GroupAlgElem zero(int m);
  static GroupAlgElem one(int m);
  static GroupAlgElem scalar(int m, const CycScalar& c);
  static GroupAlgElem from_charvals(std::vector<CycScalar> charvals);
  static GroupAlgElem from_group(std::vector<CycScalar> coeffs);
  static GroupAlgElem group_element(int m, long k);

  int m() const { return m_; }
  const std::vector<CycScalar>& charvals() const { return chi_; }
  const CycScalar& char_value(long j) const;
  // Inverse Fourier transform: coefficients of g^0, ..., g^{m-1}.
  std::vector<CycScalar> group_coeffs() const;

  // tau^{(k)}: chi_j(tau^{(k)}) = chi_{j+k}(tau).
  GroupAlgElem shift(long k) const;
  // tau_{[a,b]} = sum of tau^{(k)} for a <= k <= b.
  GroupAlgElem window(long a, long b) const;
  // Common value of every full-period window.
  CycScalar full_period() const;

  bool is_zero() const;
  bool is_invertible() const;
  GroupAlgElem inverse() const;

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem& operator-=(const GroupAlgElem& o);
  GroupAlgElem& operator*=(const GroupAlgElem& o);
  GroupAlgElem& operator*=(const CycScalar& c);
  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
  friend GroupAlgElem operator*(GroupAlgElem a, const GroupAlgElem& b) { return a *= b; }
  friend GroupAlgElem operator*(GroupAlgElem a, const CycScalar& c) { return a *= c; }
  friend GroupAlgElem operator*(const CycScalar& c, GroupAlgElem a) { return a *= c; }
  GroupAlgElem operator-() const;
  friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b);
  friend bool operator!=(const GroupAlgElem& a, const GroupAlgElem& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int m_;
  std::vector<CycScalar> chi_;
};

CycScalar char_value(const GroupAlgElem& t, long j);
GroupAlgElem tau_shift(const GroupAlgElem& t, long k);
GroupAlgElem tau_window(const GroupAlgElem& t, long a, long b);
bool is_invertible_in_group_algebra(const GroupAlgElem& t);
// sum_{i=a}^{b} tau_{[i, i+m_mu-1]}
GroupAlgElem sum_of_windows(const GroupAlgElem& t, long a, long b, long m_mu);

struct GenericityResult {
  bool generic = true;
  // A window [a,b] and character j with chi_j(tau_{[a,b]}) = 0, when not generic.
  long a = 0, b = 0, j = 0;
};

// Decides invertibility of every tau_{[a,b]}, a <= b, in finitely many steps.
GenericityResult is_generic(const GroupAlgElem& t);

// Reference decision by enumeration of 0 <= a <= b <= bmax.
GenericityResult brute_force_generic(const GroupAlgElem& t, long bmax);

}  // namespace nakajima
