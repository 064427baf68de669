#include "eqcube/casson.hpp"

#include <numeric>
#include <string>

#include "eqcube/error.hpp"

namespace eqcube {

SurgeryCoefficient::SurgeryCoefficient(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q == 0) throw Error(ErrorCode::InvalidDatum, "surgery coefficient with q = 0");
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorCode::NotCoprime, "p = " + std::to_string(p) + " and q = " + std::to_string(q) + " are not coprime");
  }
}

Rational SurgeryCoefficient::q_over_p() const {
  if (p_ == 0) throw Error(ErrorCode::ZeroP, "q/p with p = 0");
  Rational r(q_, p_);
  r.canonicalize();
  return r;
}

Rational dedekind_sum(std::int64_t q, std::int64_t p) {
  if (p < 1) throw Error(ErrorCode::InvalidDatum, "dedekind_sum needs p >= 1, got " + std::to_string(p));
  if (std::gcd(q, p) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(q) + ", " + std::to_string(p) + ") != 1");
  }
  // With u = m/p and m not divisible by p, ((u)) = (2 (m mod p) - p) / (2p).
  // k ranges over 1..p-1 and kq is never divisible by p (gcd(q, p) = 1).
  Integer acc = 0;
  const std::int64_t qm = ((q % p) + p) % p;
  for (std::int64_t k = 1; k < p; ++k) {
    const std::int64_t r = (k * qm) % p;
    acc += Integer(2 * k - p) * Integer(2 * r - p);
  }
  Rational s(acc, Integer(4) * p * p);
  s.canonicalize();
  return s;
}

Rational lambda_lens(const SurgeryCoefficient& c) {
  if (c.p() == 0) throw Error(ErrorCode::ZeroP, "lens space needs p != 0");
  const std::int64_t p = c.p() > 0 ? c.p() : -c.p();
  const std::int64_t q = c.p() > 0 ? c.q() : -c.q();
  return -dedekind_sum(q, p) / 2;
}

}  // namespace eqcube
