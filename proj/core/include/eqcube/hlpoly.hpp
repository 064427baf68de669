#pragma once

#include <compare>
#include <map>
#include <string>

#include "eqcube/rational.hpp"

namespace eqcube {

/// Laurent polynomial in t over Q with half-integer exponents allowed.
///
/// Terms are keyed by the doubled exponent: key k stands for t^{k/2}. Zero
/// coefficients are never stored, so the empty map is the zero polynomial
/// and structural equality is mathematical equality.
class HLPoly {
 public:
  using Terms = std::map<int, Rational>;

  HLPoly() = default;
  HLPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants

  /// c * t^{doubled/2}
  static HLPoly monomial(int doubled, const Rational& c = 1);
  /// c * t^{e} for an integer exponent e.
  static HLPoly t_pow(int e, const Rational& c = 1) { return monomial(2 * e, c); }
  static HLPoly from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(int doubled) const;

  /// Smallest / largest doubled exponent. Undefined on zero.
  int min_doubled() const { return terms_.begin()->first; }
  int max_doubled() const { return terms_.rbegin()->first; }

  /// True if every exponent is an integer.
  bool integral_exponents() const;
  /// True if every exponent is a half-odd integer.
  bool half_odd_exponents() const;

  HLPoly operator-() const;
  HLPoly& operator+=(const HLPoly& o);
  HLPoly& operator-=(const HLPoly& o);
  HLPoly& operator*=(const HLPoly& o);
  HLPoly& operator*=(const Rational& c);
  friend HLPoly operator+(HLPoly a, const HLPoly& b) { return a += b; }
  friend HLPoly operator-(HLPoly a, const HLPoly& b) { return a -= b; }
  friend HLPoly operator*(const HLPoly& a, const HLPoly& b);
  friend HLPoly operator*(HLPoly a, const Rational& c) { return a *= c; }
  friend HLPoly operator*(const Rational& c, HLPoly a) { return a *= c; }

  /// Multiply by t^{doubled/2}.
  HLPoly shifted(int doubled) const;
  /// d/dt, with d(t^{k/2})/dt = (k/2) t^{k/2 - 1}.
  HLPoly derivative() const;
  /// t -> t^{-1}.
  HLPoly inverted() const;
  /// Value at t = 1.
  Rational at_one() const;
  HLPoly pow(unsigned e) const;

  friend bool operator==(const HLPoly&, const HLPoly&) = default;
  friend std::strong_ordering operator<=>(const HLPoly& a, const HLPoly& b);

 private:
  void add_term(int doubled, const Rational& c);

  Terms terms_;
};

/// Human readable form, e.g. "t - 1 + t^-1" or "t^(1/2) + t^(-1/2)".
std::string to_string(const HLPoly& p);

}  // namespace eqcube
