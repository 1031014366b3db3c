#pragma once

#include <string>
#include <vector>

#include "nakajima/btau.hpp"
#include "nakajima/linalg.hpp"

namespace nakajima {

// Left B-module with an explicit basis, truncated at y-degree bound_y.
// x preserves the frame; y raises the y-degree and is cut off at bound_y.
struct TruncatedModule {
  int m = 1;
  int bound_y = 0;
  std::vector<int> labels;  // Gamma-character of each basis vector (mod m)
  std::vector<int> ydeg;    // y-degree of each basis vector
  Matrix X, Y;

  size_t dim() const { return labels.size(); }
};

// I_mu(U).  For mu = 0, U is given by the characters of a basis (x acts by 0);
// for mu != 0 the stabilizer is trivial and only dim_u = U.size() matters.
TruncatedModule kashiwara_I(const TauPtr& ctx, const CycScalar& mu, const std::vector<int>& u_labels,
                            int bound_y);

struct GammaMuModule {
  // Character multiplicities; a single entry when the stabilizer is trivial.
  std::vector<int> multiplicities;
  int dim() const;
};

// ker(x - mu); throws "increase truncation" if the answer changes between
// bound_y - 1 and bound_y.
GammaMuModule kashiwara_K(const TruncatedModule& M, const CycScalar& mu, const GroupAlgElem& tau);

struct PymReport {
  bool identity_py = true;   // (p y)|_{M_k} = -sum_{i=0}^{k} ... p'
  bool identity_yp = true;   // (y p)|_{M_{k+1}} = -sum_{i=1}^{k+1} ... p'
  bool y_bijective = true;   // y : M_k -> M_{k+1}
  bool ok() const { return identity_py && identity_yp && y_bijective; }
  std::string detail;
};

PymReport pym_recursion_check(const TruncatedModule& M, const CycScalar& mu, const GroupAlgElem& tau, int k);

// p_mu = x for mu = 0, x^m - mu^m otherwise, as a matrix polynomial in X.
Matrix p_mu_of(const Matrix& X, const CycScalar& mu, int m);
Matrix p_mu_prime_of(const Matrix& X, const CycScalar& mu, int m);

}  // namespace nakajima
