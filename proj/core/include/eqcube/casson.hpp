#pragma once

#include <cstdint>

#include "eqcube/rational.hpp"

namespace eqcube {

/// p/q surgery coefficient with gcd(|p|, |q|) = 1 and q != 0.
class SurgeryCoefficient {
 public:
  /// Throws Error{NotCoprime} or Error{InvalidDatum} (q = 0).
  SurgeryCoefficient(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  /// q/p; requires p != 0.
  Rational q_over_p() const;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)), with ((u)) = u - floor(u) - 1/2
/// for non-integral u and 0 otherwise. Requires p >= 1 and gcd(q, p) = 1
/// (Error{NotCoprime}).
Rational dedekind_sum(std::int64_t q, std::int64_t p);

/// Casson-Walker invariant, in Casson normalization (lambda = lambda_W / 2),
/// of the lens space obtained by p/q surgery on the unknot:
///
///   lambda(S^3(U; p/q)) = -s(q, p) / 2      (p > 0),
///
/// with p/q = (-p)/(-q) used for p < 0. Throws Error{ZeroP} when p = 0.
Rational lambda_lens(const SurgeryCoefficient& c);

}  // namespace eqcube
