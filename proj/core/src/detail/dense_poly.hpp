#pragma once

// Dense polynomial kernels behind the Laurent/fraction types. Not installed.
//
// UPoly is a univariate polynomial over Q stored by ascending degree; BPoly is
// a polynomial in y whose coefficients are UPoly in x. Both keep no trailing
// zeros, so the zero polynomial is an empty vector.

#include <utility>
#include <vector>

#include "eqcube/rational.hpp"

namespace eqcube::detail {

struct UPoly {
  std::vector<Rational> c;

  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rational& v) { return v == 0 ? UPoly{} : UPoly({v}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& lead() const { return c.back(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }

  friend bool operator==(const UPoly&, const UPoly&) = default;
};

UPoly operator+(const UPoly& a, const UPoly& b);
UPoly operator-(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly operator*(const UPoly& a, const Rational& s);
/// Quotient and remainder; b must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// a / b where b is known to divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct BPoly {
  std::vector<UPoly> c;  // c[j] = coefficient of y^j

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const UPoly& lead() const { return c.back(); }
  bool is_one() const { return c.size() == 1 && c[0].is_one(); }

  friend bool operator==(const BPoly&, const BPoly&) = default;
};

BPoly operator+(const BPoly& a, const BPoly& b);
BPoly operator-(const BPoly& a, const BPoly& b);
BPoly operator*(const BPoly& a, const BPoly& b);
BPoly operator*(const BPoly& a, const UPoly& s);
/// Monic gcd of the x-coefficients.
UPoly content(const BPoly& a);
/// a divided by its content and scaled so its leading rational is one.
BPoly primitive_part(const BPoly& a);
/// Pseudo-remainder of a by b with respect to y.
BPoly pseudo_remainder(const BPoly& a, const BPoly& b);
/// a / b where b is known to divide a in Q[x, y].
BPoly exact_div(const BPoly& a, const BPoly& b);
/// Gcd in Q[x, y], normalized so the leading rational coefficient is one.
BPoly gcd(const BPoly& a, const BPoly& b);

}  // namespace eqcube::detail
