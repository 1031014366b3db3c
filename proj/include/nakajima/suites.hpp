#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nakajima/group_algebra.hpp"
#include "nakajima/quiver.hpp"

namespace nakajima {

// Outcome of one invariant suite.  Each failure carries a JSON reproduction
// config.  A suite marked expected_fail documents a known counterexample:
// it is healthy exactly when the failure shows up.
struct SuiteResult {
  std::string module, invariant;
  long passed = 0, total = 0;
  bool expected_fail = false;
  bool known_conflict = false;  // failures are the documented Dunkl-term class
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  bool identities_held() const { return failures.empty(); }
  // Healthy: all identities held, or the documented failure appeared.
  bool ok() const { return expected_fail ? !failures.empty() : failures.empty(); }
  std::string status() const;
};

// Character values drawn from small nonzero rationals (and a zeta term when
// with_zeta and m > 2); redrawn until generic.
GroupAlgElem random_generic_tau(int m, std::mt19937_64& rng, bool with_zeta = false);

struct CorpusEntry {
  std::string name;
  QuiverData data;
};
// CM n = 1..max_n with r = 1, rank-two m = 1 instances n = 1..max_n, and the
// m = 2 instance with dims V = (1,1), W = (1,0), tau = (1,1), seed 1.
std::vector<CorpusEntry> standard_corpus(int max_n);
QuiverData cyclic_m2_instance();
QuiverData rank_two_instance(int n);

SuiteResult suite_scalar_axioms(int max_m, int samples, uint64_t seed);
SuiteResult suite_genericity(int max_m, int samples, uint64_t seed);
SuiteResult suite_products(int max_m, int samples, uint64_t seed);
SuiteResult suite_commutator(int max_m, uint64_t seed);
SuiteResult suite_kashiwara(int max_m, int bound_y, int max_k, uint64_t seed);
SuiteResult suite_quadric_dims(int max_m, int max_ij);
// corrupt flips one entry of the computed table before comparing.
SuiteResult suite_dual_table(int max_m, bool corrupt = false);
SuiteResult suite_koszul(int max_m, int box, uint64_t seed, int jobs);
SuiteResult suite_cohomology(int max_m, int range);
SuiteResult suite_quiver(const std::vector<CorpusEntry>& corpus, uint64_t seed);
SuiteResult suite_monad(const std::vector<CorpusEntry>& corpus, int box);
SuiteResult suite_trivialization(const std::vector<CorpusEntry>& corpus, int max_k, int max_l);

struct RoundtripCase {
  int m = 1, d = 1, r = 1;
  GroupAlgElem tau;
  int count = 30;
  int bound_y = 4;
};
// Both composites on random primary decomposable points.
SuiteResult suite_point_roundtrip(const RoundtripCase& c, uint64_t seed);
// Both composites on random fat modules.
SuiteResult suite_module_roundtrip(const RoundtripCase& c, uint64_t seed);
// tau = 0, m = 1, p = x, U = span{1}: expected to fail.
SuiteResult suite_tau_zero_counterexample();

// Pipeline on every corpus entry; compares the m = 1, n = 1 output with the
// frozen fixture when fixtures_dir is non-empty.
SuiteResult suite_pipeline(const std::vector<CorpusEntry>& corpus, int max_k, int max_l, int jobs,
                           const std::string& fixtures_dir);

}  // namespace nakajima
