#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "approxrat/errors.hpp"

namespace approxrat {

/// Arbitrary-precision signed integer. GMP supplies divmod, gcd and comparison.
using Integer = mpz_class;

/// Euclidean division for a positive divisor: remainder lands in [0, divisor).
struct DivMod {
  Integer quotient;
  Integer remainder;
};

inline DivMod divmod(const Integer& dividend, const Integer& divisor) {
  if (sgn(divisor) == 0) throw zero_denominator_error("divmod: division by zero");
  DivMod out;
  mpz_fdiv_qr(out.quotient.get_mpz_t(), out.remainder.get_mpz_t(), dividend.get_mpz_t(),
              divisor.get_mpz_t());
  if (sgn(out.remainder) < 0) {
    // negative divisor with floor division; shift into [0, |divisor|)
    out.remainder -= divisor;
    out.quotient += 1;
  }
  return out;
}

inline Integer pow10(std::size_t exponent) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return out;
}

/// Number of decimal digits of |n|; zero occupies one digit.
inline std::size_t digit_len(const Integer& n) {
  if (sgn(n) == 0) return 1;
  // mpz_sizeinbase is exact or one too large for base 10.
  std::size_t len = mpz_sizeinbase(n.get_mpz_t(), 10);
  if (len > 1 && mpz_cmpabs(n.get_mpz_t(), pow10(len - 1).get_mpz_t()) < 0) --len;
  return len;
}

inline std::string to_string(const Integer& n) { return n.get_str(10); }

}  // namespace approxrat
