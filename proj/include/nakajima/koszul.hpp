#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nakajima/linalg.hpp"
#include "nakajima/quadric.hpp"

namespace nakajima {

// Letters of the free algebra on the generators: 0 = x, 1 = z, 2 = y, 3 = w.
using Word = std::vector<int>;
using Bidegree = std::array<int, 2>;

// Words with p[0] letters from {x, z} and p[1] letters from {y, w}.
std::vector<Word> words_of_type(const Bidegree& p);

// Components of the dual coalgebra (Q^!)^*: for each type p and each
// character j, the subspace of span(words of type p) e_j lying in
// V^{a} R V^{b} for every split, with R the quadratic relations of Q.
class KoszulDual {
 public:
  // Computes every p with p[0], p[1] <= max_part and p[0] + p[1] <= max_total.
  KoszulDual(TauPtr ctx, int max_part = 2, int max_total = 4);

  const TauPtr& context() const { return ctx_; }
  bool has(const Bidegree& p) const { return comp_.count(p) > 0; }
  const std::vector<Word>& words(const Bidegree& p) const { return words_.at(p); }
  // Basis of K_p e_j, as coordinate vectors over words(p).
  const Subspace& component(const Bidegree& p, int j) const { return comp_.at(p)[j]; }
  long dim(const Bidegree& p) const;
  std::map<Bidegree, long> table() const;

 private:
  TauPtr ctx_;
  std::map<Bidegree, std::vector<Word>> words_;
  std::map<Bidegree, std::vector<Subspace>> comp_;
};

// Expected dimensions of Q^! (index (2,2) Frobenius shape), zero elsewhere.
long expected_dual_dim(const Bidegree& p, int m);
// Compares a table with the expected one; the mutation hook lets callers
// corrupt one entry to confirm the comparison can fail.
bool dual_table_matches(const std::map<Bidegree, long>& table, int m);

// Multiplication pairing of the dual onto the top component (2,2): the
// coefficient matrix of each top element split into prefix/suffix words
// must have full rank summed over characters.
bool frobenius_pairing_check(const KoszulDual& dual, const Bidegree& p);

enum class KoszulKind { Partial1, Partial2, Full };

struct KoszulBidegreeReport {
  Bidegree bideg{};
  std::vector<long> dims;   // dim C_n, n = 0..length
  std::vector<long> ranks;  // rank of d_n : C_n -> C_{n-1} (ranks[0] = augmentation)
  bool d_squared_zero = true;
  bool exact = true;
  long euler = 0;
};

// Builds the (partial) Koszul complex of Q in bidegree (i,j) as explicit
// matrices and checks exactness of the augmented complex.
KoszulBidegreeReport koszul_check_bidegree(const KoszulDual& dual, KoszulKind kind, int i, int j);

struct KoszulReport {
  std::vector<KoszulBidegreeReport> entries;
  bool all_exact() const;
};

KoszulReport koszul_check(const KoszulDual& dual, KoszulKind kind, int max_i, int max_j, int jobs = 1);

std::string to_string(KoszulKind k);

}  // namespace nakajima
