#pragma once

#include <gmpxx.h>

#include <string>

namespace quotbn {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonicalized rational from a numerator/denominator pair.
inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer factorial(unsigned n);

inline Rational inv_factorial(unsigned n) {
  Rational q(Integer(1), factorial(n));
  q.canonicalize();
  return q;
}

/// Reduced "p" or "p/q" rendering, stable across runs.
inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Integer value of a rational known to be integral; throws otherwise.
long to_long(const Rational& q);

}  // namespace quotbn
