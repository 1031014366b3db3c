#pragma once

#include <array>
#include <string>
#include <vector>

#include "nakajima/linalg.hpp"
#include "nakajima/poly.hpp"
#include "nakajima/quadric.hpp"
#include "nakajima/quiver.hpp"

namespace nakajima {

// Sum of twisted free modules: basis vector s generates a copy of e_{label} Q
// shifted by twist, i.e. its (k,l) piece is e_{label} Q_{(k,l) + twist}.
struct GradedFree {
  std::vector<int> labels;
  std::vector<std::array<int, 2>> twists;
  size_t size() const { return labels.size(); }
  void append(int label, std::array<int, 2> twist) {
    labels.push_back(label);
    twists.push_back(twist);
  }
};

// Which line, if any, to restrict to: z = 0 or w = 0.
enum class LineKill { None, Z, W };

// Basis of the (k,l) piece: pairs (generator, monomial x^a z^b y^c w^d),
// group parts absorbed through the generator's label.
struct PieceBasis {
  struct Item {
    size_t gen;
    QElem::Key mono;
    int right_label;
  };
  std::vector<Item> items;
  std::map<std::pair<size_t, QElem::Key>, size_t> index;
};
PieceBasis piece_basis(const GradedFree& F, int k, int l, int m, LineKill kill = LineKill::None);

// Q-linear map F -> G, f_s |-> sum_t g_t * e(t, s); entries are stored
// multiplied on the right by the source idempotent.
struct QMatrix {
  GradedFree src, dst;
  std::vector<std::vector<QElem>> e;  // dst.size() x src.size()

  QMatrix(TauPtr ctx, GradedFree s, GradedFree d);
  void set(size_t t, size_t s, const QElem& q);
  bool is_zero() const;
  // Every term of e(t,s) moves label(s) to label(t) and has the degree
  // twist(t) - twist(s).
  bool is_equivariant() const;
  Matrix evaluate(int k, int l, LineKill kill = LineKill::None) const;
  std::string to_string() const;

  TauPtr ctx;
};

// B * A.
QMatrix compose(const QMatrix& B, const QMatrix& A);

struct MonadData {
  QuiverData quiver;
  TauPtr ctx;
  GradedFree source, middle, target;
  QMatrix a, b;
};

// Throws std::invalid_argument carrying the defect when the data is not admissible.
MonadData build_monad(const QuiverData& d);
bool monad_identity_holds(const MonadData& M);

struct MonadDims {
  long source = 0, middle_total = 0, target = 0;
  long rank_a = 0, rank_b = 0;
  long ker_a = 0, middle = 0, coker_b = 0;
};
MonadDims monad_cohomology_dims(const MonadData& M, int k, int l);

struct FramingReport {
  // H^p(E(s,t)) for (s,t) in {(0,0), (-1,0), (0,-1), (-1,-1)}.
  std::array<std::array<long, 3>, 4> h{};
  bool vanishing_ok = true;      // H^0 at the three negative twists and every H^2 vanish
  bool h1_equals_v = true;       // H^1(E(-1,-1)) = dim V
  bool framing_sequence_ok = true;  // 0 -> H^0(E) -> W -> V -> H^1(E) -> 0
  bool ok() const { return vanishing_ok && h1_equals_v && framing_sequence_ok; }
  std::string detail;
};
FramingReport h1_framing_check(const MonadData& M);

struct LineReport {
  struct Row {
    int k = 0, degree = 0;
    long middle = 0, expected = 0;
    bool injective = true, surjective = true, characters_match = true;
  };
  std::vector<Row> rows;
  bool ok() const;
};
// Restricts to z = 0 (which = Z) or w = 0 and compares each degree with W (x) O.
LineReport restrict_to_line(const MonadData& M, LineKill which, int max_degree, int max_other = 2);

struct TrivializationPair {
  BiPoly P;        // det(x Id - B1 z)
  BiPoly P_prime;  // x^s P, Gamma-invariant
  int n = 0, s = 0;
  QMatrix Phi, Psi;
};

TrivializationPair build_trivialization(const MonadData& M);

struct TrivializationReport {
  bool normalized = true;      // P'(1,0) = 1
  bool b_phi_zero = true;      // symbolic
  bool psi_a_zero = true;      // symbolic
  bool composite_is_p2 = true; // symbolic Psi Phi = P'^2
  bool pointwise_ok = true;    // same identities as matrices on bidegree pieces
  bool z_isomorphism = true;   // z : C_{k,l} -> C_{k+1,l} on the cokernel of Psi
  bool ok() const {
    return normalized && b_phi_zero && psi_a_zero && composite_is_p2 && pointwise_ok && z_isomorphism;
  }
  std::string detail;
};
TrivializationReport check_trivialization(const MonadData& M, const TrivializationPair& T, int max_k, int max_l);

// BiPoly in (x, z) as an element of Q.
QElem bipoly_to_q(const TauPtr& ctx, const BiPoly& p);

}  // namespace nakajima
