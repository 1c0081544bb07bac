#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "approxrat/errors.hpp"
#include "approxrat/integer.hpp"
#include "approxrat/rational.hpp"

namespace approxrat {

/// Canonical partial quotients [a0; a1, ..., an] of a non-negative rational:
/// a0 >= 0, ai >= 1 in the interior and an >= 2 whenever n >= 1.
class ContinuedFraction {
 public:
  ContinuedFraction() : quotients_{Integer(0)} {}

  /// Accepts any admissible quotient list and folds a trailing 1 into its
  /// predecessor, so [2; 2, 1] becomes [2; 3].
  explicit ContinuedFraction(std::vector<Integer> quotients) : quotients_(std::move(quotients)) {
    if (quotients_.empty()) throw std::invalid_argument("continued fraction: no quotients");
    if (sgn(quotients_.front()) < 0)
      throw std::invalid_argument("continued fraction: negative leading quotient");
    for (std::size_t i = 1; i < quotients_.size(); ++i)
      if (sgn(quotients_[i]) <= 0)
        throw std::invalid_argument("continued fraction: non-positive partial quotient");
    if (quotients_.size() > 1 && quotients_.back() == 1) {
      quotients_.pop_back();
      quotients_.back() += 1;
    }
  }

  const std::vector<Integer>& quotients() const noexcept { return quotients_; }
  /// Index of the last quotient.
  std::size_t last_index() const noexcept { return quotients_.size() - 1; }
  std::size_t size() const noexcept { return quotients_.size(); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Integer> quotients_;
};

/// One iteration of the Euclid/convergent recurrence.
struct ConvergentStep {
  std::size_t k = 0;
  Integer a;          // partial quotient a_k
  Integer p;          // numerator p_k
  Integer q;          // denominator q_k
  Integer remainder;  // b_k; zero on the final step

  Rational value() const { return Rational(p, q); }
  bool is_last() const { return sgn(remainder) == 0; }
};

/// Lazily walks the convergents p_k/q_k of a non-negative rational.
///
/// Each call to next() performs one Euclidean division b_{k-2} = a_k b_{k-1} + b_k
/// and advances p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2} from
/// the seeds p_{-2}=0, p_{-1}=1, q_{-2}=1, q_{-1}=0. The stream ends after the
/// step whose remainder is zero; that step equals the input exactly.
class ConvergentStream {
 public:
  explicit ConvergentStream(const Rational& x)
      : dividend_(x.num()), divisor_(x.den()), p_prev2_(0), p_prev_(1), q_prev2_(1), q_prev_(0) {
    if (x.sign() < 0) throw negative_input_error("convergents: negative input " + format(x));
  }

  std::optional<ConvergentStep> next() {
    if (done_) return std::nullopt;
    ConvergentStep step;
    step.k = index_++;
    auto [a, b] = divmod(dividend_, divisor_);
    step.a = std::move(a);
    step.remainder = std::move(b);
    step.p = step.a * p_prev_ + p_prev2_;
    step.q = step.a * q_prev_ + q_prev2_;

    p_prev2_ = std::exchange(p_prev_, step.p);
    q_prev2_ = std::exchange(q_prev_, step.q);
    dividend_ = std::exchange(divisor_, step.remainder);
    done_ = step.is_last();
    return step;
  }

  bool done() const noexcept { return done_; }

 private:
  Integer dividend_;
  Integer divisor_;
  Integer p_prev2_, p_prev_;
  Integer q_prev2_, q_prev_;
  std::size_t index_ = 0;
  bool done_ = false;
};

/// All convergent steps of x (x >= 0).
inline std::vector<ConvergentStep> convergents(const Rational& x) {
  std::vector<ConvergentStep> out;
  ConvergentStream stream(x);
  while (auto step = stream.next()) out.push_back(std::move(*step));
  return out;
}

inline ContinuedFraction cf_expand(const Rational& x) {
  if (x.sign() < 0) throw negative_input_error("cf_expand: negative input " + format(x));
  std::vector<Integer> quotients;
  ConvergentStream stream(x);
  while (auto step = stream.next()) quotients.push_back(std::move(step->a));
  return ContinuedFraction(std::move(quotients));
}

/// Folds the quotients back into p/q via the forward recurrence.
inline Rational evaluate(const ContinuedFraction& cf) {
  Integer p_prev2(0), p_prev(1), q_prev2(1), q_prev(0);
  for (const auto& a : cf.quotients()) {
    Integer p = a * p_prev + p_prev2;
    Integer q = a * q_prev + q_prev2;
    p_prev2 = std::exchange(p_prev, std::move(p));
    q_prev2 = std::exchange(q_prev, std::move(q));
  }
  return Rational(p_prev, q_prev);
}

/// Diagnostic rendering `[a0; a1, a2, ...]`.
inline std::string to_string(const ContinuedFraction& cf) {
  const auto& qs = cf.quotients();
  std::string out = "[" + to_string(qs.front());
  for (std::size_t i = 1; i < qs.size(); ++i) {
    out += (i == 1) ? "; " : ", ";
    out += to_string(qs[i]);
  }
  return out + "]";
}

}  // namespace approxrat
