#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nakajima/btau.hpp"

namespace nakajima {

struct QTerm {
  int a = 0, b = 0, c = 0, d = 0, g = 0;
  CycScalar coef;
};

// Element of Q in normal form x^a z^b y^c w^d t, t in the group algebra.
class QElem {
 public:
  using Key = std::array<int, 4>;  // exponents of x, z, y, w
  explicit QElem(TauPtr ctx);
  static QElem x(TauPtr ctx);
  static QElem z(TauPtr ctx);
  static QElem y(TauPtr ctx);
  static QElem w(TauPtr ctx);
  static QElem group(TauPtr ctx, long k);
  static QElem scalar(TauPtr ctx, const CycScalar& c);
  static QElem monomial(TauPtr ctx, const Key& k, const GroupAlgElem& t);
  static QElem from_terms(TauPtr ctx, const std::vector<QTerm>& terms);

  const TauPtr& context() const { return ctx_; }
  const std::map<Key, GroupAlgElem>& terms() const { return t_; }
  std::vector<QTerm> group_terms() const;
  bool is_zero() const { return t_.empty(); }
  // Bidegree of a homogeneous element; throws if inhomogeneous or zero.
  std::array<int, 2> bidegree() const;
  bool is_homogeneous() const;

  QElem operator+(const QElem& o) const;
  QElem operator-(const QElem& o) const;
  QElem operator*(const QElem& o) const;
  QElem operator*(const CycScalar& s) const;
  QElem operator-() const;
  bool operator==(const QElem& o) const;
  bool operator!=(const QElem& o) const { return !(*this == o); }

  // this * e_j, with e_j the j-th character idempotent.
  QElem times_idempotent(int j) const;

  void add_term(const Key& k, const GroupAlgElem& t);
  std::string to_string() const;

 private:
  TauPtr ctx_;
  std::map<Key, GroupAlgElem> t_;
};

QElem q_multiply(const QElem& u, const QElem& v);
QElem q_multiply_by_rewriting(const QElem& u, const QElem& v);

// Set z = w = 1.
BElem specialize_to_B(const QElem& u);

// (i+1)(j+1)m; throws on negative bidegree.
long q_dim(int i, int j, int m);
// Normal-form monomials x^a z^b y^c w^d g^k of bidegree (i,j).
std::vector<QTerm> q_basis(int i, int j, int m);
// Rank of the span of all products generator * basis(Q_{p - e}) inside
// Q_p, built up from Q_{0,0}; equals q_dim when Q is generated in degree one.
long q_dim_by_generation(const TauPtr& ctx, int i, int j);
// All of the above for 0 <= a <= i, 0 <= c <= j at once.
std::vector<std::vector<long>> q_dim_table_by_generation(const TauPtr& ctx, int i, int j);

// Q_{e_k} Q_p == Q_{p + e_k} as spans (k = 0 for (1,0), k = 1 for (0,1)).
bool strong_generation_check(const TauPtr& ctx, int i, int j, int k);

struct CohEntry {
  long dim = 0;
  // Multiplicities of the characters of the adjoint Gamma-action, with
  // the epsilon twists acting on the left.
  std::vector<long> characters;
};

CohEntry coh_dim(int p, int i, int j, int m);
// sum_p (-1)^p dim H^p(O(i,j)).
long euler_characteristic(int i, int j, int m);

// Shift of the Gamma-label caused by a monomial: #x - #y.
inline int label_shift(const QElem::Key& k) { return k[0] - k[2]; }

}  // namespace nakajima
