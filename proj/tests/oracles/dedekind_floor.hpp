#pragma once

#include <gmpxx.h>

namespace oracle {

// ((u)) = u - floor(u) - 1/2, or 0 for integral u.
inline mpq_class sawtooth(const mpq_class& u) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), u.get_num_mpz_t(), u.get_den_mpz_t());
  if (u.get_den() == 1) return 0;
  return u - fl - mpq_class(1, 2);
}

inline mpq_class dedekind(long q, long p) {
  mpq_class s = 0;
  for (long k = 1; k < p; ++k) {
    mpq_class a(k, p);
    mpq_class b(k * q, p);
    a.canonicalize();
    b.canonicalize();
    s += sawtooth(a) * sawtooth(b);
  }
  return s;
}

}  // namespace oracle
