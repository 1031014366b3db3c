#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "nakajima/group_algebra.hpp"

namespace nakajima {

// Holds tau and the memoized coefficients of
//   y^b x^c = sum_j x^{c-j} y^{b-j} C(b,c,j)      (group part on the right)
// which drive normal-form multiplication in both B_tau and the quadric Q.
class TauContext {
 public:
  explicit TauContext(GroupAlgElem tau);
  int m() const { return tau_.m(); }
  const GroupAlgElem& tau() const { return tau_; }
  const std::vector<GroupAlgElem>& ycommute(int b, int c) const;
  bool same_as(const TauContext& o) const { return this == &o || tau_ == o.tau_; }

 private:
  GroupAlgElem tau_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, std::vector<GroupAlgElem>> cache_;
};

using TauPtr = std::shared_ptr<const TauContext>;
TauPtr make_tau(const GroupAlgElem& tau);

// Group-basis view of a single normal-form term.
struct BTerm {
  int a = 0, b = 0, g = 0;
  CycScalar c;
};

// Element of B_tau in normal form x^a y^b t, t in the group algebra.
class BElem {
 public:
  using Key = std::pair<int, int>;
  explicit BElem(TauPtr ctx);
  static BElem x(TauPtr ctx);
  static BElem y(TauPtr ctx);
  static BElem group(TauPtr ctx, long k);
  static BElem scalar(TauPtr ctx, const CycScalar& c);
  static BElem monomial(TauPtr ctx, int a, int b, const GroupAlgElem& t);
  static BElem from_terms(TauPtr ctx, const std::vector<BTerm>& terms);

  const TauPtr& context() const { return ctx_; }
  const std::map<Key, GroupAlgElem>& terms() const { return t_; }
  std::vector<BTerm> group_terms() const;
  bool is_zero() const { return t_.empty(); }
  // Order filtration degree (max y-degree), -1 for zero.
  int filtration_degree() const;

  BElem operator+(const BElem& o) const;
  BElem operator-(const BElem& o) const;
  BElem operator*(const BElem& o) const;
  BElem operator*(const CycScalar& s) const;
  BElem operator-() const;
  bool operator==(const BElem& o) const;
  bool operator!=(const BElem& o) const { return !(*this == o); }

  void add_term(int a, int b, const GroupAlgElem& t);
  std::string to_string() const;

 private:
  void check(const BElem& o) const;
  TauPtr ctx_;
  std::map<Key, GroupAlgElem> t_;
};

BElem b_multiply(const BElem& u, const BElem& v);

// Independent reference product: rewrites words letter by letter using only
// yx -> xy + tau, gx -> eps(g) xg, gy -> eps(g)^{-1} yg in the group basis.
BElem b_multiply_by_rewriting(const BElem& u, const BElem& v);

struct CommutatorCheck {
  BElem lhs, rhs;
  bool equal = false;
};

// [y, p_mu(x)] against tau_{[0,m_mu-1]}/m_mu * p_mu'(x); mu = 0 means p = x,
// otherwise p = x^m - mu^m.
CommutatorCheck commutator_y_pmu(const TauPtr& ctx, const CycScalar& mu);

// y . f in the left module B / B y, for f in the polynomial subalgebra.
BElem y_action_on_polynomials(const BElem& f);

}  // namespace nakajima
