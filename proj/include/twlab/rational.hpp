#ifndef TWLAB_RATIONAL_HPP
#define TWLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace twlab {

// All scalar arithmetic in the library is exact. Integers are
// arbitrary-precision and rationals are kept canonical (gcd-reduced,
// positive denominator) by GMP.
using Int = mpz_class;
using Rational = mpq_class;

using Index = std::int64_t;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

// "num" when the denominator is 1, "num/den" otherwise.
inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace twlab

#endif
