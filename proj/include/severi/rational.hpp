#pragma once

#include <gmpxx.h>

namespace severi {

// Exact arithmetic everywhere; no floating point in the core.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace severi
