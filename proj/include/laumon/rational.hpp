#pragma once

#include <gmpxx.h>
#include <string>

namespace laumon {

// Exact rational scalars. mpq_class keeps itself canonical (reduced,
// positive denominator).
using Q = mpq_class;
using Z = mpz_class;

inline bool is_zero(const Q& q) { return sgn(q) == 0; }

inline Q q_of(long num, long den = 1) {
  Q q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Q& q) { return q.get_str(); }

inline std::string to_string(const Z& z) { return z.get_str(); }

// Floor division for possibly negative numerators, e.g. floor_div(-4,3) = -2.
inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace laumon
