#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "approxrat/continued_fraction.hpp"
#include "approxrat/errors.hpp"
#include "approxrat/integer.hpp"
#include "approxrat/rational.hpp"

namespace approxrat {

/// Bracket on |x - p_k/q_k| for an interior convergent:
///   1/(q_k (q_k + q_{k+1})) < |x - p_k/q_k| <= 1/(q_k q_{k+1}).
struct ErrorBounds {
  Rational lower;
  Rational upper;
};

/// Valid for 0 < k < n, where n is the last index of cf_expand(x).
inline ErrorBounds error_bounds(const Rational& x, std::size_t k) {
  if (k == 0) throw index_error("error_bounds: k must be positive");
  ConvergentStream stream(x);
  Integer q_k;
  while (auto step = stream.next()) {
    if (step->k == k) {
      if (step->is_last())
        throw index_error("error_bounds: k = " + std::to_string(k) + " is the last index");
      q_k = step->q;
    } else if (step->k == k + 1) {
      return ErrorBounds{Rational(Integer(1), q_k * (q_k + step->q)), Rational(Integer(1), q_k * step->q)};
    }
  }
  throw index_error("error_bounds: k = " + std::to_string(k) + " exceeds the expansion length");
}

/// F_{k+1} (F_0 = 0, F_1 = 1): the smallest q_k any convergent can have.
inline Integer fib_lower_bound(std::size_t k) {
  Integer out;
  mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(k + 1));
  return out;
}

namespace detail {

// Phi^n = (L_n + F_n sqrt5) / 2, so numer * Phi^n <= denom reduces to an
// integer inequality. Strict equality is impossible for n >= 1.
inline bool phi_power_at_most(std::size_t n, const Integer& numer, const Integer& denom) {
  Integer fib, lucas;
  mpz_fib_ui(fib.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_lucnum_ui(lucas.get_mpz_t(), static_cast<unsigned long>(n));
  // numer (L + F sqrt5) <= 2 denom  <=>  numer F sqrt5 <= 2 denom - numer L
  Integer rhs = 2 * denom - numer * lucas;
  if (sgn(rhs) < 0) return false;
  Integer lhs = numer * fib;
  return 5 * lhs * lhs <= rhs * rhs;
}

// Largest n >= 0 with Phi^n <= denom / numer (requires denom >= numer).
inline std::size_t floor_log_phi(const Integer& numer, const Integer& denom, double estimate) {
  std::size_t n = estimate > 1.0 ? static_cast<std::size_t>(estimate) - 1 : 0;
  while (n > 0 && !phi_power_at_most(n, numer, denom)) --n;
  while (phi_power_at_most(n + 1, numer, denom)) ++n;
  return n;
}

}  // namespace detail

/// Upper bound on the convergent index needed to reach an absolute error of
/// 10^-N: floor(a + bN) with a = log_phi(5)/2 and b = log_phi(10)/2, tightened to
/// floor(a - 1/2 + bN) when ceil(a + bN - 3/2) is even.
///
/// The floors are decided exactly: with v = (a + bN), 2v = log_phi(5 * 10^N) is
/// irrational, so floor(v) = floor(n/2) and ceil(v - 3/2) = floor(v - 1/2) =
/// floor((n-1)/2), where n = floor(2v) is found by comparing Phi-powers against
/// 5 * 10^N through their Fibonacci/Lucas coordinates.
inline std::size_t iteration_bound(std::size_t decimal_digits) {
  if (decimal_digits < 1) throw std::invalid_argument("iteration_bound: N must be positive");
  const Integer target = 5 * pow10(decimal_digits);
  const double log_phi = std::log(std::numbers::phi);
  const double estimate =
      (std::log(5.0) + static_cast<double>(decimal_digits) * std::log(10.0)) / log_phi;
  const std::size_t two_v = detail::floor_log_phi(Integer(1), target, estimate);
  const std::size_t plain = two_v / 2;
  const std::size_t strengthened = (two_v - 1) / 2;
  return strengthened % 2 == 0 ? strengthened : plain;
}

/// Levy's constant in log form: ln(gamma) = pi^2 / (12 ln 2).
inline double log_levy_constant() {
  return std::numbers::pi * std::numbers::pi / (12.0 * std::numbers::ln2);
}

/// Heuristic mean convergent index for an absolute error of 10^-N,
/// N ln 10 / (2 ln gamma) ~ 0.97 N.
inline double mean_iterations_estimate(std::size_t decimal_digits) {
  return static_cast<double>(decimal_digits) * std::numbers::ln10 / (2.0 * log_levy_constant());
}

}  // namespace approxrat
