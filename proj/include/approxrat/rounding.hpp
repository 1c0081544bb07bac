#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "approxrat/continued_fraction.hpp"
#include "approxrat/errors.hpp"
#include "approxrat/integer.hpp"
#include "approxrat/rational.hpp"

namespace approxrat {

/// A non-negative error tolerance, or infinity (criterion disabled).
class Tolerance {
 public:
  static Tolerance infinity() { return Tolerance(); }

  explicit Tolerance(Rational value) : value_(std::move(value)) {
    if (value_->sign() < 0) throw std::invalid_argument("tolerance must be non-negative");
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_zero() const noexcept { return value_ && value_->is_zero(); }
  const Rational& value() const { return *value_; }

  friend bool operator==(const Tolerance&, const Tolerance&) = default;

 private:
  Tolerance() = default;
  std::optional<Rational> value_;
};

inline std::string to_string(const Tolerance& t) { return t.is_infinite() ? "inf" : format(t.value()); }

// --- policies -------------------------------------------------------------

struct Exact {
  friend bool operator==(const Exact&, const Exact&) = default;
};

/// Convergent rounding under an absolute and/or relative criterion, fired when
/// either part of a result has more than `trigger` decimal digits.
struct ToleranceRound {
  Tolerance abs_tol = Tolerance::infinity();
  Tolerance rel_tol = Tolerance::infinity();
  std::size_t trigger = 0;
  friend bool operator==(const ToleranceRound&, const ToleranceRound&) = default;
};

/// Numerator and denominator each limited to `max_len` digits.
struct FixedSlash {
  std::size_t max_len = 1;
  friend bool operator==(const FixedSlash&, const FixedSlash&) = default;
};

/// Numerator plus denominator limited to `max_total` digits.
struct FloatingSlash {
  std::size_t max_total = 2;
  friend bool operator==(const FloatingSlash&, const FloatingSlash&) = default;
};

/// Keep the leading `digits` digits of each part, zero the rest.
struct Reductive {
  std::size_t digits = 1;
  friend bool operator==(const Reductive&, const Reductive&) = default;
};

using RoundingPolicy = std::variant<Exact, ToleranceRound, FixedSlash, FloatingSlash, Reductive>;

struct RoundingOutcome {
  Rational value;
  bool triggered = false;
  std::size_t iterations = 0;  // convergent index k of the result; 0 if not applicable
};

inline void validate(const RoundingPolicy& policy) {
  std::visit(
      [](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, FixedSlash>) {
          if (p.max_len < 1) throw std::invalid_argument("fixed slash: L must be at least 1");
        } else if constexpr (std::is_same_v<P, FloatingSlash>) {
          if (p.max_total < 2) throw std::invalid_argument("floating slash: S must be at least 2");
        } else if constexpr (std::is_same_v<P, Reductive>) {
          if (p.digits < 1) throw std::invalid_argument("reductive: D must be at least 1");
        }
      },
      policy);
}

namespace detail {

// |x - p/q| < tol for x = xn/xd >= 0, by cross-multiplication:
// |xn q - p xd| * tol.den < tol.num * xd * q
inline bool within_absolute(const Rational& x, const ConvergentStep& c, const Rational& tol) {
  if (tol.is_zero()) return c.is_last();
  Integer diff = x.num() * c.q - c.p * x.den();
  mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
  return diff * tol.den() < tol.num() * x.den() * c.q;
}

// |x - p/q| < tol * x, i.e. |xn q - p xd| * tol.den < tol.num * xn * q
inline bool within_relative(const Rational& x, const ConvergentStep& c, const Rational& tol) {
  if (tol.is_zero()) return c.is_last();
  Integer diff = x.num() * c.q - c.p * x.den();
  mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
  return diff * tol.den() < tol.num() * x.num() * c.q;
}

inline Rational with_sign(int sign, Rational value) { return sign < 0 ? -value : value; }

}  // namespace detail

/// Replaces x by the first convergent of |x| meeting every enabled criterion
/// (absolute error < abs_tol, relative error < rel_tol), then restores the sign.
/// Nothing happens while both parts of x fit in `trigger` digits.
inline RoundingOutcome round_tolerance(const Rational& x, const Tolerance& abs_tol,
                                       const Tolerance& rel_tol, std::size_t trigger) {
  if (slash_lengths(x).max() <= trigger) return {x, false, 0};

  const Rational magnitude = abs(x);
  ConvergentStream stream(magnitude);
  while (auto step = stream.next()) {
    bool ok = step->is_last();
    if (!ok) {
      ok = true;
      if (!abs_tol.is_infinite()) ok = detail::within_absolute(magnitude, *step, abs_tol.value());
      if (ok && !rel_tol.is_infinite() && !magnitude.is_zero())
        ok = detail::within_relative(magnitude, *step, rel_tol.value());
    }
    if (ok) return {detail::with_sign(x.sign(), Rational(step->p, step->q)), true, step->k};
  }
  return {x, true, 0};  // unreachable: the stream always ends on an exact step
}

namespace detail {

// Last convergent of |x| whose lengths satisfy `fits`. Convergent numerators
// and denominators never decrease, so the scan stops at the first misfit.
template <typename Fits>
RoundingOutcome last_fitting_convergent(const Rational& x, Fits fits, const char* what) {
  std::optional<ConvergentStep> best;
  ConvergentStream stream(abs(x));
  while (auto step = stream.next()) {
    if (!fits(digit_len(step->p), digit_len(step->q))) break;
    best = std::move(step);
  }
  if (!best) throw unrepresentable_error(std::string(what) + ": integer part of " + format(x) + " does not fit");
  return {with_sign(x.sign(), Rational(best->p, best->q)), true, best->k};
}

}  // namespace detail

inline RoundingOutcome round_fixed_slash(const Rational& x, std::size_t max_len) {
  validate(FixedSlash{max_len});
  if (slash_lengths(x).max() <= max_len) return {x, false, 0};
  return detail::last_fitting_convergent(
      x, [max_len](std::size_t ln, std::size_t ld) { return ln <= max_len && ld <= max_len; },
      "fixed slash");
}

inline RoundingOutcome round_floating_slash(const Rational& x, std::size_t max_total) {
  validate(FloatingSlash{max_total});
  if (slash_lengths(x).total <= max_total) return {x, false, 0};
  return detail::last_fitting_convergent(
      x, [max_total](std::size_t ln, std::size_t ld) { return ln + ld <= max_total; },
      "floating slash");
}

namespace detail {

// Zeroes every digit of |n| after the leading `digits` ones.
inline Integer keep_leading_digits(const Integer& n, std::size_t digits) {
  const std::size_t len = digit_len(n);
  if (len <= digits) return n;
  const Integer scale = pow10(len - digits);
  Integer kept;
  mpz_tdiv_q(kept.get_mpz_t(), n.get_mpz_t(), scale.get_mpz_t());
  return kept * scale;
}

}  // namespace detail

inline RoundingOutcome round_reductive(const Rational& x, std::size_t digits) {
  validate(Reductive{digits});
  if (slash_lengths(x).max() <= digits) return {x, false, 0};
  return {Rational(detail::keep_leading_digits(x.num(), digits), detail::keep_leading_digits(x.den(), digits)),
          true, 0};
}

inline RoundingOutcome apply_policy(const RoundingPolicy& policy, const Rational& x) {
  return std::visit(
      [&x](const auto& p) -> RoundingOutcome {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Exact>) {
          return {x, false, 0};
        } else if constexpr (std::is_same_v<P, ToleranceRound>) {
          return round_tolerance(x, p.abs_tol, p.rel_tol, p.trigger);
        } else if constexpr (std::is_same_v<P, FixedSlash>) {
          return round_fixed_slash(x, p.max_len);
        } else if constexpr (std::is_same_v<P, FloatingSlash>) {
          return round_floating_slash(x, p.max_total);
        } else {
          return round_reductive(x, p.digits);
        }
      },
      policy);
}

// --- text syntax ----------------------------------------------------------
//   exact | tol:D=<lit>,d=<lit|inf>,M=<int> | fslash:L=<int> | flslash:S=<int> | reduct:D=<int>

namespace detail {

inline std::size_t parse_count(std::string_view text, std::string_view context) {
  if (!all_digits(text) || text.size() > 18)
    throw parse_error("policy: expected a non-negative integer for " + std::string(context) + ", got '" +
                      std::string(text) + "'");
  return static_cast<std::size_t>(std::stoull(std::string(text)));
}

inline Tolerance parse_tolerance(std::string_view text) {
  if (text == "inf") return Tolerance::infinity();
  Rational value = parse(text);
  if (value.sign() < 0) throw parse_error("policy: tolerance must be non-negative");
  return Tolerance(std::move(value));
}

// Splits "k1=v1,k2=v2" into pairs.
inline std::vector<std::pair<std::string, std::string>> parse_params(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw parse_error("policy: expected key=value, got '" + std::string(item) + "'");
    out.emplace_back(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw parse_error("policy: trailing comma");
  }
  return out;
}

inline std::size_t single_count(std::string_view body, std::string_view key, std::string_view family) {
  auto params = parse_params(body);
  if (params.size() != 1 || params.front().first != key)
    throw parse_error("policy: " + std::string(family) + " takes exactly " + std::string(key) + "=<int>");
  return parse_count(params.front().second, key);
}

}  // namespace detail

inline RoundingPolicy parse_policy(std::string_view text) {
  if (text == "exact") return Exact{};
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw parse_error("policy: unknown policy '" + std::string(text) + "'");
  auto family = text.substr(0, colon);
  auto body = text.substr(colon + 1);

  RoundingPolicy policy;
  if (family == "tol") {
    ToleranceRound p;
    bool seen_abs = false, seen_rel = false, seen_trigger = false;
    for (auto& [key, value] : detail::parse_params(body)) {
      if (key == "D" && !seen_abs) {
        p.abs_tol = detail::parse_tolerance(value);
        seen_abs = true;
      } else if (key == "d" && !seen_rel) {
        p.rel_tol = detail::parse_tolerance(value);
        seen_rel = true;
      } else if (key == "M" && !seen_trigger) {
        p.trigger = detail::parse_count(value, "M");
        seen_trigger = true;
      } else {
        throw parse_error("policy: unexpected or repeated key '" + key + "' in tol");
      }
    }
    if (!seen_abs || !seen_rel || !seen_trigger) throw parse_error("policy: tol needs D=, d= and M=");
    policy = p;
  } else if (family == "fslash") {
    policy = FixedSlash{detail::single_count(body, "L", family)};
  } else if (family == "flslash") {
    policy = FloatingSlash{detail::single_count(body, "S", family)};
  } else if (family == "reduct") {
    policy = Reductive{detail::single_count(body, "D", family)};
  } else {
    throw parse_error("policy: unknown family '" + std::string(family) + "'");
  }
  try {
    validate(policy);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("policy: ") + e.what());
  }
  return policy;
}

inline std::string to_string(const RoundingPolicy& policy) {
  return std::visit(
      [](const auto& p) -> std::string {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Exact>) {
          return "exact";
        } else if constexpr (std::is_same_v<P, ToleranceRound>) {
          return "tol:D=" + to_string(p.abs_tol) + ",d=" + to_string(p.rel_tol) + ",M=" + std::to_string(p.trigger);
        } else if constexpr (std::is_same_v<P, FixedSlash>) {
          return "fslash:L=" + std::to_string(p.max_len);
        } else if constexpr (std::is_same_v<P, FloatingSlash>) {
          return "flslash:S=" + std::to_string(p.max_total);
        } else {
          return "reduct:D=" + std::to_string(p.digits);
        }
      },
      policy);
}

}  // namespace approxrat
