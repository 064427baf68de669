#pragma once

#include "eqcube/alexander.hpp"
#include "eqcube/hlpoly.hpp"

namespace oracle {

// Delta(t) = normalized det(t^{1/2} S - t^{-1/2} S^T) for a 2x2 Seifert
// matrix S = [[s00, s01], [s10, s11]].
inline eqcube::HLPoly seifert_alexander(long s00, long s01, long s10, long s11) {
  using eqcube::HLPoly;
  const HLPoly h = HLPoly::monomial(1);
  const HLPoly hi = HLPoly::monomial(-1);
  auto entry = [&](long s, long st) { return h * mpq_class(s) - hi * mpq_class(st); };
  const HLPoly m00 = entry(s00, s00);
  const HLPoly m01 = entry(s01, s10);
  const HLPoly m10 = entry(s10, s01);
  const HLPoly m11 = entry(s11, s11);
  return eqcube::normalize_symmetric(m00 * m11 - m01 * m10);
}

// Delta''(1) / 2.
inline mpq_class half_second_derivative_at_one(const eqcube::HLPoly& p) {
  return p.derivative().derivative().at_one() / 2;
}

}  // namespace oracle
