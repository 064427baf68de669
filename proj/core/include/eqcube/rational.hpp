#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eqcube {

/// Arbitrary precision rational, always kept in lowest terms with positive
/// denominator (gmp canonicalizes after every operation).
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form. Prefer this over mpq_class(num, den), which
/// does not reduce.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "n/d" (any sign placement gmp understands). Throws
/// Error{ParseError} on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace eqcube
