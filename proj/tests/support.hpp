#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>

#include "approxrat/integer.hpp"
#include "approxrat/rational.hpp"

namespace approxrat::testing {

/// Seeded source of big integers and fractions for property tests.
class Generator {
 public:
  explicit Generator(unsigned long seed) : rng_(gmp_randinit_default) { rng_.seed(seed); }

  /// Uniform in [lo, hi].
  Integer uniform(const Integer& lo, const Integer& hi) { return lo + rng_.get_z_range(hi - lo + 1); }

  /// Uniform in [1, 10^digits].
  Integer positive(std::size_t digits) { return uniform(Integer(1), pow10(digits)); }

  /// Number of digits drawn uniformly from [1, max_digits], then a value of
  /// that order, so short and long parts both show up.
  Integer mixed(std::size_t max_digits) {
    const std::size_t digits = 1 + static_cast<std::size_t>(uniform(Integer(0), Integer(static_cast<long>(max_digits) - 1)).get_ui());
    return positive(digits);
  }

  Rational nonneg(std::size_t max_digits) { return Rational(mixed(max_digits) - 1, mixed(max_digits)); }

  Rational signed_rational(std::size_t max_digits) {
    Rational x = nonneg(max_digits);
    return coin() ? -x : x;
  }

  bool coin() { return rng_.get_z_bits(1) == 1; }

 private:
  gmp_randclass rng_;
};

inline bool is_normalized(const Rational& x) {
  return sgn(x.den()) > 0 && gcd(x.num(), x.den()) == 1 && (x.num() != 0 || x.den() == 1);
}

}  // namespace approxrat::testing
