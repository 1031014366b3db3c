#include "nakajima/koszul.hpp"

#include <algorithm>
#include <stdexcept>

#include "nakajima/parallel.hpp"

namespace nakajima {

namespace {

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

bool is_first_kind(int letter) { return letter == 0 || letter == 1; }

int letter_shift(int letter) { return letter == 0 ? 1 : (letter == 2 ? -1 : 0); }

int word_shift(const Word& w, size_t from = 0) {
  int s = 0;
  for (size_t i = from; i < w.size(); ++i) s += letter_shift(w[i]);
  return s;
}

void all_words(size_t len, Word& cur, std::vector<Word>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (int l = 0; l < 4; ++l) {
    cur.push_back(l);
    all_words(len, cur, out);
    cur.pop_back();
  }
}

std::vector<Word> all_words(size_t len) {
  std::vector<Word> out;
  Word cur;
  all_words(len, cur, out);
  return out;
}

struct Relation {
  std::vector<std::pair<Word, long>> terms;  // integer part
  bool has_tau = false;                      // extra -tau * zw
};

const std::vector<Relation>& relations() {
  static const std::vector<Relation> rels = {
      {{{{0, 1}, 1}, {{1, 0}, -1}}, false},  // xz - zx
      {{{{2, 3}, 1}, {{3, 2}, -1}}, false},  // yw - wy
      {{{{2, 1}, 1}, {{1, 2}, -1}}, false},  // yz - zy
      {{{{0, 3}, 1}, {{3, 0}, -1}}, false},  // xw - wx
      {{{{1, 3}, 1}, {{3, 1}, -1}}, false},  // zw - wz
      {{{{2, 0}, 1}, {{0, 2}, -1}}, true},   // yx - xy - tau zw
  };
  return rels;
}

Bidegree type_of(const Word& w) {
  Bidegree p{0, 0};
  for (int l : w) ++p[is_first_kind(l) ? 0 : 1];
  return p;
}

}  // namespace

std::vector<Word> words_of_type(const Bidegree& p) {
  std::vector<Word> out;
  for (auto& w : all_words(static_cast<size_t>(p[0] + p[1])))
    if (type_of(w) == p) out.push_back(std::move(w));
  return out;
}

KoszulDual::KoszulDual(TauPtr ctx, int max_part, int max_total) : ctx_(std::move(ctx)) {
  int m = ctx_->m();
  const GroupAlgElem& tau = ctx_->tau();
  for (int p0 = 0; p0 <= max_part; ++p0)
    for (int p1 = 0; p1 <= max_part; ++p1) {
      if (p0 + p1 > max_total) continue;
      Bidegree p{p0, p1};
      auto ws = words_of_type(p);
      std::map<Word, size_t> index;
      for (size_t i = 0; i < ws.size(); ++i) index[ws[i]] = i;
      size_t n = static_cast<size_t>(p0 + p1), N = ws.size();
      std::vector<Subspace> comps;
      for (int j = 0; j < m; ++j) {
        if (n < 2) {
          comps.push_back(Subspace::full(N));
          continue;
        }
        Subspace acc = Subspace::full(N);
        for (size_t pos = 0; pos + 2 <= n; ++pos) {
          Subspace gen(N);
          for (const auto& u : all_words(pos))
            for (const auto& u2 : all_words(n - pos - 2))
              for (const auto& r : relations()) {
                Word probe = u;
                probe.insert(probe.end(), r.terms[0].first.begin(), r.terms[0].first.end());
                probe.insert(probe.end(), u2.begin(), u2.end());
                if (type_of(probe) != p) continue;
                Vec v = zero_vec(N);
                auto put = [&](const Word& mid, const CycScalar& c) {
                  Word w = u;
                  w.insert(w.end(), mid.begin(), mid.end());
                  w.insert(w.end(), u2.begin(), u2.end());
                  v[index.at(w)] += c;
                };
                for (const auto& [mid, c] : r.terms) put(mid, CycScalar(m, c));
                if (r.has_tau) put({1, 3}, -tau.char_value(j + word_shift(u2)));
                gen.add(v);
              }
          acc = acc.intersect(gen);
        }
        comps.push_back(std::move(acc));
      }
      words_[p] = std::move(ws);
      comp_[p] = std::move(comps);
    }
}

long KoszulDual::dim(const Bidegree& p) const {
  long d = 0;
  for (const auto& s : comp_.at(p)) d += static_cast<long>(s.dim());
  return d;
}

std::map<Bidegree, long> KoszulDual::table() const {
  std::map<Bidegree, long> t;
  for (const auto& [p, c] : comp_) t[p] = dim(p);
  return t;
}

long expected_dual_dim(const Bidegree& p, int m) {
  if (p[0] < 0 || p[1] < 0 || p[0] > 2 || p[1] > 2) return 0;
  static const int shape[3][3] = {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}};
  return static_cast<long>(shape[p[0]][p[1]]) * m;
}

bool dual_table_matches(const std::map<Bidegree, long>& table, int m) {
  for (const auto& [p, d] : table)
    if (d != expected_dual_dim(p, m)) return false;
  return true;
}

bool frobenius_pairing_check(const KoszulDual& dual, const Bidegree& p) {
  Bidegree top{2, 2}, q{2 - p[0], 2 - p[1]};
  if (p[0] < 0 || p[1] < 0 || q[0] < 0 || q[1] < 0) return false;
  int m = dual.context()->m();
  const auto& tw = dual.words(top);
  const auto& pw = dual.words(p);
  const auto& qw = dual.words(q);
  std::map<Word, size_t> pi, qi;
  for (size_t i = 0; i < pw.size(); ++i) pi[pw[i]] = i;
  for (size_t i = 0; i < qw.size(); ++i) qi[qw[i]] = i;
  long total_rank = 0;
  for (int j = 0; j < m; ++j) {
    for (const auto& kappa : dual.component(top, j).basis()) {
      Matrix c(pw.size(), qw.size());
      for (size_t t = 0; t < tw.size(); ++t) {
        if (kappa[t].is_zero()) continue;
        // Split the word after its first p[0] + p[1] letters.
        size_t cut = static_cast<size_t>(p[0] + p[1]);
        Word pre(tw[t].begin(), tw[t].begin() + cut), suf(tw[t].begin() + cut, tw[t].end());
        auto a = pi.find(pre), b = qi.find(suf);
        if (a == pi.end() || b == qi.end()) continue;
        c(a->second, b->second) += kappa[t];
      }
      total_rank += static_cast<long>(rank(c));
    }
  }
  return total_rank == dual.dim(p) && total_rank == dual.dim(q);
}

std::string to_string(KoszulKind k) {
  switch (k) {
    case KoszulKind::Partial1: return "partial{1}";
    case KoszulKind::Partial2: return "partial{2}";
    case KoszulKind::Full: return "full";
  }
  return "?";
}

namespace {

// One right-label block of the complex in a fixed bidegree.
class KoszulBlock {
 public:
  KoszulBlock(const KoszulDual& dual, KoszulKind kind, int i, int j, int k)
      : dual_(dual), ctx_(dual.context()), i_(i), j_(j), k_(k) {
    int len = kind == KoszulKind::Full ? 4 : 2;
    for (int n = 0; n <= len; ++n) {
      std::vector<Bidegree> ps;
      for (int p0 = 0; p0 <= 2; ++p0)
        for (int p1 = 0; p1 <= 2; ++p1) {
          if (p0 + p1 != n || p0 > i || p1 > j) continue;
          if (kind == KoszulKind::Partial1 && p1 != 0) continue;
          if (kind == KoszulKind::Partial2 && p0 != 0) continue;
          ps.push_back({p0, p1});
        }
      levels_.push_back(ps);
    }
    for (const auto& lv : levels_) {
      std::map<Bidegree, size_t> off;
      size_t total = 0;
      for (const auto& p : lv) {
        off[p] = total;
        total += dual_.words(p).size() * static_cast<size_t>((i_ - p[0] + 1) * (j_ - p[1] + 1));
      }
      offsets_.push_back(off);
      ambient_.push_back(total);
    }
  }

  size_t levels() const { return levels_.size(); }

  // Basis of C_n inside the ambient word (x) monomial space.
  std::vector<Vec> chain_basis(size_t n) const {
    int m = ctx_->m();
    std::vector<Vec> out;
    for (const auto& p : levels_[n]) {
      int I = i_ - p[0], J = j_ - p[1];
      size_t nw = dual_.words(p).size();
      for (int a = 0; a <= I; ++a)
        for (int c = 0; c <= J; ++c) {
          int mid = mod(k_ + a - c, m);
          size_t mono = static_cast<size_t>(a * (J + 1) + c);
          for (const auto& beta : dual_.component(p, mid).basis()) {
            Vec v = zero_vec(ambient_[n]);
            for (size_t w = 0; w < nw; ++w)
              if (!beta[w].is_zero()) v[offsets_[n].at(p) + w * (I + 1) * (J + 1) + mono] = beta[w];
            out.push_back(std::move(v));
          }
        }
    }
    return out;
  }

  // Ambient differential: (u l) (x) q  ->  u (x) l q.
  Vec apply_d(size_t n, const Vec& v) const {
    Vec out = zero_vec(ambient_[n - 1]);
    int m = ctx_->m();
    for (const auto& p : levels_[n]) {
      int I = i_ - p[0], J = j_ - p[1];
      size_t block = static_cast<size_t>((I + 1) * (J + 1));
      const auto& ws = dual_.words(p);
      for (size_t w = 0; w < ws.size(); ++w)
        for (size_t mono = 0; mono < block; ++mono) {
          const CycScalar& coef = v[offsets_[n].at(p) + w * block + mono];
          if (coef.is_zero()) continue;
          int letter = ws[w].back();
          Word u(ws[w].begin(), ws[w].end() - 1);
          Bidegree p2 = p;
          --p2[is_first_kind(letter) ? 0 : 1];
          int a = static_cast<int>(mono) / (J + 1), c = static_cast<int>(mono) % (J + 1);
          QElem q = letter_elem(letter) * QElem::monomial(ctx_, {a, I - a, c, J - c}, idempotent(m, k_));
          int I2 = i_ - p2[0], J2 = j_ - p2[1];
          size_t u_idx = index_of(p2, u);
          size_t base = offsets_[n - 1].at(p2) + u_idx * (I2 + 1) * (J2 + 1);
          for (const auto& [key, t] : q.terms()) {
            const CycScalar& val = t.char_value(k_);
            if (val.is_zero()) continue;
            out[base + key[0] * (J2 + 1) + key[2]].add_mul(coef, val);
          }
        }
    }
    return out;
  }

 private:
  static GroupAlgElem idempotent(int m, int k) {
    std::vector<CycScalar> cv(m, CycScalar(m));
    cv[mod(k, m)] = CycScalar(m, 1L);
    return GroupAlgElem::from_charvals(std::move(cv));
  }

  QElem letter_elem(int letter) const {
    switch (letter) {
      case 0: return QElem::x(ctx_);
      case 1: return QElem::z(ctx_);
      case 2: return QElem::y(ctx_);
      default: return QElem::w(ctx_);
    }
  }

  size_t index_of(const Bidegree& p, const Word& u) const {
    const auto& ws = dual_.words(p);
    auto it = std::lower_bound(ws.begin(), ws.end(), u);
    if (it == ws.end() || *it != u) throw std::logic_error("word not found");
    return static_cast<size_t>(it - ws.begin());
  }

  const KoszulDual& dual_;
  TauPtr ctx_;
  int i_, j_, k_;
  std::vector<std::vector<Bidegree>> levels_;
  std::vector<std::map<Bidegree, size_t>> offsets_;
  std::vector<size_t> ambient_;
};

}  // namespace

KoszulBidegreeReport koszul_check_bidegree(const KoszulDual& dual, KoszulKind kind, int i, int j) {
  int m = dual.context()->m();
  KoszulBidegreeReport rep;
  rep.bideg = {i, j};
  size_t len = kind == KoszulKind::Full ? 4 : 2;
  rep.dims.assign(len + 1, 0);
  rep.ranks.assign(len + 1, 0);
  for (int k = 0; k < m; ++k) {
    KoszulBlock blk(dual, kind, i, j, k);
    for (size_t n = 0; n < blk.levels(); ++n) {
      auto basis = blk.chain_basis(n);
      rep.dims[n] += static_cast<long>(basis.size());
      if (n == 0 || basis.empty()) continue;
      std::vector<Vec> imgs;
      for (const auto& b : basis) {
        Vec d = blk.apply_d(n, b);
        if (n >= 2 && !is_zero_vec(blk.apply_d(n - 1, d))) rep.d_squared_zero = false;
        imgs.push_back(std::move(d));
      }
      size_t width = imgs.front().size();
      rep.ranks[n] += static_cast<long>(rank_of_rows(std::move(imgs), width));
    }
  }
  // Augmentation onto Q^I_0: an isomorphism exactly when C_0 is in its support.
  bool aug = (kind == KoszulKind::Full && i == 0 && j == 0) || (kind == KoszulKind::Partial1 && i == 0) ||
             (kind == KoszulKind::Partial2 && j == 0);
  rep.ranks[0] = aug ? rep.dims[0] : 0;
  for (size_t n = 0; n <= len; ++n) {
    long next = n + 1 <= len ? rep.ranks[n + 1] : 0;
    if (rep.dims[n] - rep.ranks[n] != next) rep.exact = false;
    rep.euler += (n % 2 ? -1 : 1) * rep.dims[n];
  }
  rep.exact = rep.exact && rep.d_squared_zero;
  return rep;
}

bool KoszulReport::all_exact() const {
  for (const auto& e : entries)
    if (!e.exact) return false;
  return true;
}

KoszulReport koszul_check(const KoszulDual& dual, KoszulKind kind, int max_i, int max_j, int jobs) {
  KoszulReport rep;
  rep.entries.resize(static_cast<size_t>((max_i + 1) * (max_j + 1)));
  parallel_for(rep.entries.size(), jobs, [&](size_t idx) {
    int i = static_cast<int>(idx) / (max_j + 1), j = static_cast<int>(idx) % (max_j + 1);
    rep.entries[idx] = koszul_check_bidegree(dual, kind, i, j);
  });
  return rep;
}

}  // namespace nakajima
