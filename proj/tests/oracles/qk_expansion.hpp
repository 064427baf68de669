#pragma once

#include <array>
#include <utility>

#include "eqcube/tri_var.hpp"

namespace oracle {

// Q_k for delta = Delta = 1 written out as the six terms
// (u^k - u^-k)(1 + v)/(1 - v) over ordered pairs (u, v) of distinct
// variables among x, y, z = 1/(xy). Each variable is an exponent vector in
// (x, y).
inline eqcube::TriVarElem qk_trivial_pair(int k) {
  using eqcube::BiLaurent;
  using eqcube::TriVarElem;
  const std::array<std::pair<int, int>, 3> var{{{1, 0}, {0, 1}, {-1, -1}}};
  TriVarElem sum;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto [ux, uy] = var[i];
      const auto [vx, vy] = var[j];
      const BiLaurent odd = BiLaurent::monomial(k * ux, k * uy) - BiLaurent::monomial(-k * ux, -k * uy);
      const BiLaurent num = odd * (BiLaurent(1) + BiLaurent::monomial(vx, vy));
      const BiLaurent den = BiLaurent(1) - BiLaurent::monomial(vx, vy);
      sum = sum + TriVarElem(num, den);
    }
  }
  return sum;
}

// Q_k(1,1,1) for delta = Delta = 1, frozen from an independent computer
// algebra evaluation of the limit along three lines through (1,1,1).
inline long qk_trivial_pair_at_111(int k) { return 12L * k; }

}  // namespace oracle
