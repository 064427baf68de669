#pragma once

#include <string>

#include "eqcube/hlpoly.hpp"

namespace eqcube {

/// Element of Q(t^{1/2}) stored as a reduced fraction of HLPolys.
///
/// Normal form: numerator and denominator coprime as polynomials in
/// s = t^{1/2}; denominator has lowest exponent 0 and is monic. Any Laurent
/// monomial lives in the numerator. Equal values therefore compare equal
/// structurally.
class OneVarFrac {
 public:
  OneVarFrac() : den_(1) {}
  OneVarFrac(const HLPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  OneVarFrac(const Rational& c) : OneVarFrac(HLPoly(c)) {}              // NOLINT(google-explicit-constructor)
  /// Throws Error{DivisionByZero} if den is zero.
  OneVarFrac(const HLPoly& num, const HLPoly& den);

  const HLPoly& num() const { return num_; }
  const HLPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_polynomial() const { return den_ == HLPoly(1); }

  OneVarFrac operator-() const;
  friend OneVarFrac operator+(const OneVarFrac& a, const OneVarFrac& b);
  friend OneVarFrac operator-(const OneVarFrac& a, const OneVarFrac& b);
  friend OneVarFrac operator*(const OneVarFrac& a, const OneVarFrac& b);
  /// Throws Error{DivisionByZero} when b is zero.
  friend OneVarFrac operator/(const OneVarFrac& a, const OneVarFrac& b);
  OneVarFrac& operator+=(const OneVarFrac& o) { return *this = *this + o; }
  OneVarFrac& operator-=(const OneVarFrac& o) { return *this = *this - o; }
  OneVarFrac& operator*=(const OneVarFrac& o) { return *this = *this * o; }

  /// t -> t^{-1} in numerator and denominator.
  OneVarFrac inverted() const;

  friend bool operator==(const OneVarFrac&, const OneVarFrac&) = default;

 private:
  HLPoly num_;
  HLPoly den_;
};

std::string to_string(const OneVarFrac& f);

}  // namespace eqcube
