#pragma once

#include "eqcube/hlpoly.hpp"
#include "eqcube/one_var_frac.hpp"

namespace eqcube {

/// True if p(t^{-1}) = p(t).
bool is_symmetric(const HLPoly& p);

/// Rescales p by c * t^{-(max+min)/2} so that the result is symmetric with
/// value 1 at t = 1.
///
/// Throws Error{NotSymmetrizable} when no monomial shift makes p symmetric
/// (this includes shifts by quarter powers) and Error{NonUnitAtOne} when the
/// shifted polynomial vanishes at t = 1. p must be nonzero.
HLPoly normalize_symmetric(const HLPoly& p);

/// Normalized Alexander polynomial and annihilator of a rank-one manifold.
///
/// Invariants: Delta has integer exponents, both are symmetric and both take
/// value 1 at t = 1. delta may carry half-integer exponents. Divisibility of
/// Delta by delta is not required.
class AlexanderPair {
 public:
  /// Delta = delta = 1, the pair of S^1 x S^2.
  AlexanderPair() : Delta_(1), delta_(1) {}
  /// Validates the invariants; throws Error{InvalidAlexanderPair}.
  AlexanderPair(HLPoly Delta, HLPoly delta);

  const HLPoly& Delta() const { return Delta_; }
  const HLPoly& delta() const { return delta_; }

  friend bool operator==(const AlexanderPair&, const AlexanderPair&) = default;

 private:
  HLPoly Delta_;
  HLPoly delta_;
};

/// (1 + t)/(1 - t) + t Delta'(t) / Delta(t)
OneVarFrac i_delta(const AlexanderPair& pair);

/// t Delta'(t) / Delta(t)
OneVarFrac j_delta(const AlexanderPair& pair);

/// delta(t) when its exponents are integral, t^{1/2} delta(t) otherwise.
/// The product of this over x, y and z equals delta(x) delta(y) delta(z)
/// because xyz = 1.
HLPoly integral_delta(const HLPoly& delta);

}  // namespace eqcube
