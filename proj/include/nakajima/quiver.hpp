#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nakajima/group_algebra.hpp"
#include "nakajima/linalg.hpp"
#include "nakajima/poly.hpp"

namespace nakajima {

// Cyclic-quiver data.  Block i of each map starts at V_i (or W_i):
//   B1[i] : V_i -> V_{i-1},  B2[i] : V_i -> V_{i+1},
//   I[i]  : W_i -> V_i,      J[i]  : V_i -> W_i.
struct QuiverData {
  int m = 1;
  GroupAlgElem tau;
  std::vector<int> dimsV, dimsW;
  std::vector<Matrix> B1, B2, I, J;

  int n() const;  // dim V
  int r() const;  // dim W
  // Offsets of V_i, W_i in the full coordinate vectors.
  int v_offset(int i) const;
  int w_offset(int i) const;

  Matrix full_B1() const;
  Matrix full_B2() const;
  Matrix full_I() const;
  Matrix full_J() const;
  // Diagonal chi_i(tau) on V_i.
  Matrix tau_on_V() const;
  // Character of each coordinate of V and W.
  std::vector<int> v_labels() const;
  std::vector<int> w_labels() const;

  // Checks the block shapes; throws std::invalid_argument on mismatch.
  void validate() const;
};

// All blocks zero with the right shapes.
QuiverData zero_quiver(const GroupAlgElem& tau, const std::vector<int>& dimsV, const std::vector<int>& dimsW);

// [B1,B2] + IJ - tau|_V.
Matrix moment_defect(const QuiverData& d);
bool is_admissible(const QuiverData& d);

struct StabilityResult {
  bool stable = true;
  Subspace closure;  // smallest B-stable graded subspace containing im I
};
StabilityResult is_stable(const QuiverData& d);

// g = (g_0, ..., g_{m-1}), g_i in GL(V_i).
QuiverData gauge_apply(const std::vector<Matrix>& g, const QuiverData& d);
Matrix block_diagonal(const std::vector<Matrix>& g);

// Dimension of {X : XB1 = B1X, XB2 = B2X, XI = 0, JX = 0} (graded X);
// zero means the gauge stabilizer is trivial.
int stabilizer_dimension(const QuiverData& d);

// Gauge-invariant fingerprints: traces of words in B1, B2 up to max_len and
// entries of J * word * I.
std::vector<CycScalar> fingerprints(const QuiverData& d, int max_len = 6);

// det(x Id - B1) as a polynomial in x.
Poly b1_characteristic_polynomial(const QuiverData& d);

// m = 1 Calogero-Moser data: B1 = diag(0..n-1), (B2)_{ij} = -tau/(i-j) off the
// diagonal, I = ones, J = tau * ones.
QuiverData generate_cm(int n, const CycScalar& tau);

struct CyclicGenResult {
  std::optional<QuiverData> data;
  int attempts_used = 0;
  std::string failure;
};

// Samples B1 and I, solves the moment map for (B2, J) and retries until the
// data is stable and `accept` holds.
CyclicGenResult generate_cyclic(const std::vector<int>& dimsV, const std::vector<int>& dimsW, const GroupAlgElem& tau,
                                uint64_t seed, int attempts,
                                const std::function<bool(const QuiverData&)>& accept = nullptr);

}  // namespace nakajima
