#include "nakajima/rewrite.hpp"

#include <stdexcept>

namespace nakajima::rewrite {

namespace {

int rank_of(int letter) { return letter >= kG ? kG : letter; }

std::vector<int> splice(const std::vector<int>& w, size_t i, std::initializer_list<int> mid) {
  std::vector<int> r(w.begin(), w.begin() + i);
  r.insert(r.end(), mid.begin(), mid.end());
  r.insert(r.end(), w.begin() + i + 2, w.end());
  return r;
}

}  // namespace

std::map<NormalKey, CycScalar> normal_form(std::vector<Word> words, int m,
                                           const std::vector<CycScalar>& tau_group, bool with_zw) {
  if (static_cast<int>(tau_group.size()) != m) throw std::invalid_argument("tau has wrong order");
  std::map<NormalKey, CycScalar> out;
  while (!words.empty()) {
    Word w = std::move(words.back());
    words.pop_back();
    if (w.coef.is_zero()) continue;
    // Drop identity group letters.
    std::vector<int> clean;
    for (int l : w.letters)
      if (l != kG) clean.push_back(l);
    w.letters = std::move(clean);

    size_t i = 0;
    for (; i + 1 < w.letters.size(); ++i) {
      int l1 = w.letters[i], l2 = w.letters[i + 1];
      if (rank_of(l1) > rank_of(l2) || (l1 >= kG && l2 >= kG)) break;
    }
    if (i + 1 >= w.letters.size()) {
      NormalKey key{0, 0, 0, 0, 0};
      for (int l : w.letters) {
        if (l >= kG) key[4] = l - kG;
        else ++key[l];
      }
      auto it = out.find(key);
      if (it == out.end()) out.emplace(key, w.coef);
      else it->second += w.coef;
      continue;
    }
    int l1 = w.letters[i], l2 = w.letters[i + 1];
    if (l1 >= kG && l2 >= kG) {
      int k = (l1 - kG + l2 - kG) % m;
      std::vector<int> r(w.letters.begin(), w.letters.begin() + i);
      r.push_back(kG + k);
      r.insert(r.end(), w.letters.begin() + i + 2, w.letters.end());
      words.push_back({w.coef, std::move(r)});
    } else if (l1 >= kG) {
      int k = l1 - kG;
      CycScalar c = w.coef;
      if (l2 == kX) c *= CycScalar::zeta_power(m, k);
      if (l2 == kY) c *= CycScalar::zeta_power(m, -k);
      words.push_back({c, splice(w.letters, i, {l2, l1})});
    } else if (l1 == kY && l2 == kX) {
      words.push_back({w.coef, splice(w.letters, i, {kX, kY})});
      for (int k = 0; k < m; ++k) {
        if (tau_group[k].is_zero()) continue;
        std::vector<int> r(w.letters.begin(), w.letters.begin() + i);
        if (with_zw) {
          r.push_back(kZ);
          r.push_back(kW);
        }
        r.push_back(kG + k);
        r.insert(r.end(), w.letters.begin() + i + 2, w.letters.end());
        words.push_back({w.coef * tau_group[k], std::move(r)});
      }
    } else {
      // z and w are central; x,z,y,w otherwise commute.
      words.push_back({w.coef, splice(w.letters, i, {l2, l1})});
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

}  // namespace nakajima::rewrite
