// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero when a
// criterion fails, unless its number was passed with --allow-known N.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nakajima/suites.hpp"

#ifndef NAKAJIMA_FIXTURES
#define NAKAJIMA_FIXTURES "fixtures"
#endif

using namespace nakajima;

namespace {

struct Line {
  int id;
  bool pass;
  std::string summary;
  double seconds, budget;
};

std::string counts(const std::vector<SuiteResult>& rs) {
  long p = 0, t = 0;
  for (const auto& r : rs) {
    p += r.passed;
    t += r.total;
  }
  return std::to_string(p) + "/" + std::to_string(t);
}

bool all_ok(const std::vector<SuiteResult>& rs) {
  for (const auto& r : rs)
    if (!r.ok() || (!r.expected_fail && !r.identities_held())) return false;
  return true;
}

void print_failures(const std::vector<SuiteResult>& rs) {
  for (const auto& r : rs)
    for (size_t i = 0; i < r.failures.size() && i < 2 && !r.expected_fail; ++i)
      std::cout << "    reproduce: " << r.failures[i] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allowed;
  uint64_t seed = 20261019;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--allow-known" && i + 1 < argc) allowed.insert(std::atoi(argv[++i]));
    else if (a == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
  }
  std::vector<Line> lines;
  auto timed = [&](int id, double budget, auto body) {
    auto t0 = std::chrono::steady_clock::now();
    auto [pass, summary] = body();
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > budget) {
      pass = false;
      summary += "; over time budget";
    }
    Line l{id, pass, summary, s, budget};
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << summary << "  [" << std::fixed
              << std::setprecision(2) << s << "s / " << budget << "s]" << std::endl;
    lines.push_back(l);
  };

  timed(1, 10, [&] {
    std::vector<SuiteResult> rs{suite_genericity(4, 200, seed)};
    print_failures(rs);
    return std::pair{all_ok(rs), "is_generic vs window enumeration, m<=4, 200 tau each: " + counts(rs)};
  });
  timed(2, 10, [&] {
    std::vector<SuiteResult> rs{suite_commutator(4, seed), suite_products(4, 10, seed)};
    print_failures(rs);
    return std::pair{all_ok(rs), "[y,p_mu] identity and rewriting cross-check, m<=4: " + counts(rs)};
  });
  timed(3, 30, [&] {
    std::vector<SuiteResult> rs{suite_kashiwara(3, 5, 3, seed)};
    print_failures(rs);
    return std::pair{all_ok(rs), "K(I(U)) = U and pym k<=3, m<=3, mu in {0,1}, y-bounds {4,5}: " + counts(rs)};
  });
  timed(4, 10, [&] {
    std::vector<SuiteResult> rs{suite_quadric_dims(4, 6)};
    print_failures(rs);
    return std::pair{all_ok(rs), "dim Q_{i,j} by generation, i,j<=6, m<=4: " + counts(rs)};
  });
  timed(5, 60, [&] {
    std::vector<SuiteResult> rs{suite_koszul(3, 4, seed, 1), suite_dual_table(3, false)};
    print_failures(rs);
    return std::pair{all_ok(rs), "Koszul complexes exact to (4,4), m<=3, generic and zero tau; dual table: " + counts(rs)};
  });
  timed(6, 5, [&] {
    std::vector<SuiteResult> rs{suite_cohomology(4, 5)};
    print_failures(rs);
    return std::pair{all_ok(rs), "coh_dim on [-5,5]^2 with Serre symmetry and Euler characteristic: " + counts(rs)};
  });
  std::vector<CorpusEntry> corpus = standard_corpus(3);
  timed(7, 120, [&] {
    std::vector<SuiteResult> rs{suite_monad(corpus, 4)};
    print_failures(rs);
    return std::pair{all_ok(rs), "monad identities on " + std::to_string(corpus.size()) + " instances, (k,l) in [1,4]^2: " + counts(rs)};
  });
  timed(8, 60, [&] {
    std::vector<SuiteResult> rs{suite_trivialization(corpus, 4, 4)};
    print_failures(rs);
    return std::pair{all_ok(rs), "trivialization identities on the corpus: " + counts(rs)};
  });
  timed(9, 180, [&] {
    std::mt19937_64 rng(seed);
    std::vector<SuiteResult> points, modules;
    std::ostringstream detail;
    for (int m = 1; m <= 2; ++m) {
      // For m >= 2 insist on distinct character values so the non-scalar case is exercised.
      GroupAlgElem tau = random_generic_tau(m, rng);
      while (m >= 2 && tau.char_value(0) == tau.char_value(1)) tau = random_generic_tau(m, rng);
      for (int d = 1; d <= 2; ++d)
        for (int r = 1; r <= 2; ++r) {
          RoundtripCase rc{m, d, r, tau, 30, 4};
          uint64_t s = seed + 100 * m + 10 * d + r;
          points.push_back(suite_point_roundtrip(rc, s));
          modules.push_back(suite_module_roundtrip(rc, s));
          const SuiteResult& p = points.back();
          if (!p.identities_held())
            detail << "; points m=" << m << " d=" << d << " r=" << r << " tau=" << tau.to_string() << ": "
                   << p.passed << "/" << p.total << (p.known_conflict ? " (documented Dunkl-term conflict)" : "");
        }
    }
    SuiteResult zero = suite_tau_zero_counterexample();
    print_failures(points);
    print_failures(modules);
    bool pass = all_ok(points) && all_ok(modules) && zero.status() == "expected-fail";
    return std::pair{pass, "points " + counts(points) + ", fat modules " + counts(modules) + ", tau=0 counterexample " +
                               zero.status() + detail.str()};
  });
  timed(10, 300, [&] {
    std::vector<SuiteResult> rs{suite_pipeline(corpus, 3, 3, 1, NAKAJIMA_FIXTURES)};
    print_failures(rs);
    std::string notes;
    for (const auto& n : rs[0].notes) notes += "; " + n;
    return std::pair{all_ok(rs), "pipeline postconditions on corpus plus empty V: " + counts(rs) + notes};
  });
  timed(11, 1, [&] {
    // Scope: nothing here asserts bijectivity over the whole moduli space.
    // Every statement above is a finite, per-instance check.
    return std::pair{true, std::string("global bijectivity and surjectivity are not claimed; only the per-instance "
                                       "postcondition suites above are asserted")};
  });

  int unexpected = 0;
  for (const auto& l : lines)
    if (!l.pass && !allowed.count(l.id)) ++unexpected;
  for (const auto& l : lines)
    if (!l.pass && allowed.count(l.id))
      std::cout << "note: criterion " << l.id << " failed and is listed as a known failure" << std::endl;
  return unexpected == 0 ? 0 : 1;
}
