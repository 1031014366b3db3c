#pragma once

#include <array>
#include <map>
#include <vector>

#include "nakajima/cyclotomic.hpp"

namespace nakajima::rewrite {

// Letters: 0 = x, 1 = z, 2 = y, 3 = w, 4 + k = g^k.
constexpr int kX = 0, kZ = 1, kY = 2, kW = 3, kG = 4;

struct Word {
  CycScalar coef;
  std::vector<int> letters;
};

// Exponents (x, z, y, w, g) of a normal word x^a z^b y^c w^d g^k.
using NormalKey = std::array<int, 5>;

// Brute-force normal form.  tau_group holds the group-basis coefficients of
// tau; with_zw selects the quadric relation yx = xy + tau zw instead of
// yx = xy + tau.
std::map<NormalKey, CycScalar> normal_form(std::vector<Word> words, int m,
                                           const std::vector<CycScalar>& tau_group, bool with_zw);

}  // namespace nakajima::rewrite
