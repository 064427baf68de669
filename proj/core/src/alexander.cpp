#include "eqcube/alexander.hpp"

#include "eqcube/error.hpp"

namespace eqcube {

bool is_symmetric(const HLPoly& p) { return p.inverted() == p; }

HLPoly normalize_symmetric(const HLPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::NotSymmetrizable, "zero polynomial");
  const int span = p.max_doubled() + p.min_doubled();
  if (span % 2 != 0) {
    throw Error(ErrorCode::NotSymmetrizable, to_string(p) + " would need a quarter-power shift");
  }
  HLPoly centered = p.shifted(-span / 2);
  if (!is_symmetric(centered)) {
    throw Error(ErrorCode::NotSymmetrizable, to_string(p) + " is not symmetric up to a monomial");
  }
  const Rational value = centered.at_one();
  if (value == 0) throw Error(ErrorCode::NonUnitAtOne, to_string(p) + " vanishes at t = 1");
  return centered * (1 / value);
}

AlexanderPair::AlexanderPair(HLPoly Delta, HLPoly delta) : Delta_(std::move(Delta)), delta_(std::move(delta)) {
  auto check = [](const HLPoly& p, const char* what) {
    if (!is_symmetric(p)) throw Error(ErrorCode::InvalidAlexanderPair, std::string(what) + " = " + to_string(p) + " is not symmetric");
    if (p.at_one() != 1) throw Error(ErrorCode::InvalidAlexanderPair, std::string(what) + " = " + to_string(p) + " does not take value 1 at t = 1");
  };
  if (!Delta_.integral_exponents()) {
    throw Error(ErrorCode::InvalidAlexanderPair, "Delta = " + to_string(Delta_) + " has half-integer exponents");
  }
  if (!delta_.is_zero() && !delta_.integral_exponents() && !delta_.half_odd_exponents()) {
    throw Error(ErrorCode::InvalidAlexanderPair, "delta = " + to_string(delta_) + " mixes integer and half-integer exponents");
  }
  check(Delta_, "Delta");
  check(delta_, "delta");
}

OneVarFrac j_delta(const AlexanderPair& pair) {
  return OneVarFrac(pair.Delta().derivative().shifted(2), pair.Delta());
}

OneVarFrac i_delta(const AlexanderPair& pair) {
  const OneVarFrac pole(HLPoly(1) + HLPoly::t_pow(1), HLPoly(1) - HLPoly::t_pow(1));
  return pole + j_delta(pair);
}

HLPoly integral_delta(const HLPoly& delta) {
  if (delta.integral_exponents()) return delta;
  return delta.shifted(1);
}

}  // namespace eqcube
