#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "approxrat/errors.hpp"
#include "approxrat/integer.hpp"

namespace approxrat {

/// Irreducible fraction num/den with den >= 1. The sign lives on the numerator
/// and zero is 0/1. Every constructor and operation returns a normalized value.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(Integer value) : num_(std::move(value)), den_(1) {}

  /// Reduces p/q to lowest terms and moves the sign onto the numerator.
  Rational(Integer p, Integer q) : num_(std::move(p)), den_(std::move(q)) {
    if (sgn(den_) == 0) throw zero_denominator_error("rational: zero denominator");
    canonicalize();
  }

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_zero() const noexcept { return sgn(num_) == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw zero_denominator_error("rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend Rational operator-(const Rational& a) { return Rational(Integer(-a.num_), a.den_, Trusted{}); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  struct Trusted {};
  // Caller guarantees the pair is already canonical.
  Rational(Integer p, Integer q, Trusted) : num_(std::move(p)), den_(std::move(q)) {}

  void canonicalize() {
    if (sgn(den_) < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (sgn(num_) == 0) {
      den_ = 1;
      return;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
      mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    assert(sgn(den_) > 0 && gcd(num_, den_) == 1);
  }

  Integer num_;
  Integer den_;
};

/// Builds the irreducible representative of p/q.
inline Rational normalize(Integer p, Integer q) { return Rational(std::move(p), std::move(q)); }

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline Rational neg(const Rational& x) { return -x; }

/// Three-way comparison by cross-multiplication.
inline std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

struct SlashLengths {
  std::size_t len_num = 0;
  std::size_t len_den = 0;
  std::size_t total = 0;

  std::size_t max() const noexcept { return len_num > len_den ? len_num : len_den; }
  friend bool operator==(const SlashLengths&, const SlashLengths&) = default;
};

inline SlashLengths slash_lengths(const Rational& x) {
  SlashLengths out;
  out.len_num = digit_len(x.num());
  out.len_den = digit_len(x.den());
  out.total = out.len_num + out.len_den;
  return out;
}

/// Renders `p/q`, with a leading minus for negative values.
inline std::string format(const Rational& x) { return to_string(x.num()) + "/" + to_string(x.den()); }

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << format(x); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline Integer parse_digits(std::string_view s) { return Integer(std::string(s), 10); }

}  // namespace detail

/// Parses `[-]digits[/digits]` or `[-]digits[.digits][eE[-]digits]`.
/// Decimal literals convert exactly: "1e-8" is 1/100000000.
inline Rational parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&](const char* why) -> parse_error {
    return parse_error("cannot parse '" + original + "' as a rational: " + why);
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = text.substr(0, slash);
    auto q = text.substr(slash + 1);
    if (!detail::all_digits(p) || !detail::all_digits(q)) throw fail("expected digits/digits");
    Integer num = detail::parse_digits(p);
    if (negative) num = -num;
    return Rational(std::move(num), detail::parse_digits(q));
  }

  std::string_view mantissa = text;
  std::string_view exponent;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    exponent = text.substr(e + 1);
  }
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
    if (!detail::all_digits(frac_part)) throw fail("expected digits after '.'");
  }
  if (!detail::all_digits(int_part)) throw fail("expected leading digits");

  long exp10 = 0;
  if (exponent.data() != nullptr) {
    bool exp_negative = false;
    if (!exponent.empty() && exponent.front() == '-') {
      exp_negative = true;
      exponent.remove_prefix(1);
    }
    if (!detail::all_digits(exponent) || exponent.size() > 9) throw fail("bad exponent");
    exp10 = std::stol(std::string(exponent));
    if (exp_negative) exp10 = -exp10;
  }
  exp10 -= static_cast<long>(frac_part.size());

  Integer num = detail::parse_digits(std::string(int_part) + std::string(frac_part));
  if (negative) num = -num;
  if (exp10 >= 0) return Rational(num * pow10(static_cast<std::size_t>(exp10)), Integer(1));
  return Rational(std::move(num), pow10(static_cast<std::size_t>(-exp10)));
}

}  // namespace approxrat
