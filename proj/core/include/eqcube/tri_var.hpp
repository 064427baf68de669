#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>

#include "eqcube/one_var_frac.hpp"
#include "eqcube/rational.hpp"

namespace eqcube {

/// Substitution of the variables (x, y, z): variable i is replaced by
/// variable perm[i]. The identity is {0, 1, 2}.
using Permutation = std::array<int, 3>;
extern const std::array<Permutation, 6> kAllPermutations;

/// Laurent polynomial in x and y over Q. Monomials are keyed by (x exponent,
/// y exponent); z is always eliminated as (xy)^{-1}.
class BiLaurent {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  BiLaurent() = default;
  BiLaurent(const Rational& c);  // NOLINT(google-explicit-constructor)
  static BiLaurent monomial(int xexp, int yexp, const Rational& c = 1);
  static BiLaurent from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  Rational coeff(int xexp, int yexp) const;
  int min_x() const;
  int min_y() const;
  /// Coefficient of the largest key (lexicographic in (x, y)).
  const Rational& lead() const { return terms_.rbegin()->second; }

  BiLaurent operator-() const;
  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent& operator*=(const Rational& c);
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend BiLaurent operator*(BiLaurent a, const Rational& c) { return a *= c; }

  BiLaurent shifted(int dx, int dy) const;
  /// f(x, y, z) -> f(sigma(x), sigma(y), sigma(z)), z re-eliminated.
  BiLaurent permuted(const Permutation& sigma) const;
  /// (x, y) -> (x^{-1}, y^{-1}).
  BiLaurent inverted() const;

  friend bool operator==(const BiLaurent&, const BiLaurent&) = default;
  friend std::strong_ordering operator<=>(const BiLaurent& a, const BiLaurent& b);

 private:
  void add_term(const Key& k, const Rational& c);
  Terms terms_;
};

/// Element of the fraction field of Q[x^{±1}, y^{±1}, z^{±1}]/(xyz = 1).
///
/// Stored as num/den with num, den coprime, den free of monomial factors
/// (lowest x and y exponents both 0) and den monic with respect to its
/// lexicographically largest monomial. Structural equality is equality.
class TriVarElem {
 public:
  TriVarElem() : den_(1) {}
  TriVarElem(const BiLaurent& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  TriVarElem(const Rational& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
  /// Reduces the fraction. Throws Error{DivisionByZero} if den is zero.
  TriVarElem(const BiLaurent& num, const BiLaurent& den);

  const BiLaurent& num() const { return num_; }
  const BiLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const;

  TriVarElem operator-() const;
  friend TriVarElem operator+(const TriVarElem& a, const TriVarElem& b);
  friend TriVarElem operator-(const TriVarElem& a, const TriVarElem& b);
  friend TriVarElem operator*(const TriVarElem& a, const TriVarElem& b);
  /// Throws Error{DivisionByZero} when b is zero.
  friend TriVarElem operator/(const TriVarElem& a, const TriVarElem& b);
  TriVarElem& operator+=(const TriVarElem& o) { return *this = *this + o; }
  TriVarElem& operator-=(const TriVarElem& o) { return *this = *this - o; }
  TriVarElem& operator*=(const TriVarElem& o) { return *this = *this * o; }

  TriVarElem permuted(const Permutation& sigma) const;
  /// (x, y, z) -> (x^{-1}, y^{-1}, z^{-1}).
  TriVarElem inverted() const;

  friend bool operator==(const TriVarElem&, const TriVarElem&) = default;

  /// Builds num/den where the caller guarantees gcd(num, den) = 1; only the
  /// unit normalization is applied.
  static TriVarElem from_coprime(const BiLaurent& num, const BiLaurent& den);

 private:
  BiLaurent num_;
  BiLaurent den_;
};

enum class Slot { X, Y, Z };

/// t -> x, y or (xy)^{-1}. Throws Error{HalfPowerResidue} if f still carries
/// half-integer exponents after reduction.
TriVarElem embed(const OneVarFrac& f, Slot slot);

/// Sum of f over all six permutations of (x, y, z).
TriVarElem symmetrize(const TriVarElem& f);

/// Limit of f at x = y = z = 1 along the lines x = 1 + s, y = 1 + beta*s for
/// beta in {2, 3, 5}. Throws Error{NoLimit} if any probe has a pole or the
/// probes disagree.
Rational eval_at_111(const TriVarElem& f);

/// True iff f is fixed by all six permutations and by inversion.
bool check_symmetry(const TriVarElem& f);

std::string to_string(const BiLaurent& p);
std::string to_string(const TriVarElem& f);

}  // namespace eqcube
