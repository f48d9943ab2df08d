#include "quotbn/rational.hpp"

#include "quotbn/errors.hpp"

namespace quotbn {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

long to_long(const Rational& q) {
  if (!is_integer(q))
    throw ArgumentError("expected an integer, got " + rational_str(q));
  const Integer& num = q.get_num();
  if (!num.fits_slong_p())
    throw ArgumentError("integer out of range: " + rational_str(q));
  return num.get_si();
}

}  // namespace quotbn
