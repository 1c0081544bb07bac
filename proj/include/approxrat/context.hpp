#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "approxrat/rational.hpp"
#include "approxrat/rounding.hpp"

namespace approxrat {

/// Counters for policy-wrapped arithmetic. The histogram only covers
/// operations whose result actually went through rounding.
struct Stats {
  std::uint64_t op_count = 0;
  std::uint64_t round_triggered_count = 0;
  std::map<std::size_t, std::uint64_t> iteration_histogram;
  std::size_t max_k = 0;

  /// Mean convergent index over triggered roundings; empty when none fired.
  std::optional<double> mean_k() const {
    if (round_triggered_count == 0) return std::nullopt;
    long double weighted = 0;
    for (const auto& [k, count] : iteration_histogram) weighted += static_cast<long double>(k) * count;
    return static_cast<double>(weighted / round_triggered_count);
  }

  void record(const RoundingOutcome& outcome) {
    ++op_count;
    if (!outcome.triggered) return;
    ++round_triggered_count;
    ++iteration_histogram[outcome.iterations];
    if (outcome.iterations > max_k) max_k = outcome.iterations;
  }

  void merge(const Stats& other) {
    op_count += other.op_count;
    round_triggered_count += other.round_triggered_count;
    for (const auto& [k, count] : other.iteration_histogram) iteration_histogram[k] += count;
    if (other.max_k > max_k) max_k = other.max_k;
  }

  friend bool operator==(const Stats&, const Stats&) = default;
};

inline void to_json(nlohmann::json& j, const Stats& s) {
  j = nlohmann::json{{"op_count", s.op_count},
                     {"round_triggered_count", s.round_triggered_count},
                     {"max_k", s.max_k},
                     {"mean_k", nullptr}};
  if (auto mean = s.mean_k()) j["mean_k"] = *mean;
}

inline std::string stats_csv_header() { return "op_count,round_triggered_count,max_k,mean_k"; }

/// Flat CSV record matching stats_csv_header(); mean_k is blank when absent.
inline std::string to_csv_row(const Stats& s) {
  std::ostringstream os;
  os << s.op_count << ',' << s.round_triggered_count << ',' << s.max_k << ',';
  if (auto mean = s.mean_k()) os << *mean;
  return os.str();
}

/// Arithmetic that computes each result exactly and then hands it to a
/// rounding policy. Operands are never rounded on entry.
///
/// Not thread-safe; give each thread its own Context.
class Context {
 public:
  explicit Context(RoundingPolicy policy = Exact{}) : policy_(std::move(policy)) { validate(policy_); }

  Rational add(const Rational& a, const Rational& b) { return finish(a + b); }
  Rational sub(const Rational& a, const Rational& b) { return finish(a - b); }
  Rational mul(const Rational& a, const Rational& b) { return finish(a * b); }
  Rational div(const Rational& a, const Rational& b) { return finish(a / b); }

  const RoundingPolicy& policy() const noexcept { return policy_; }
  const Stats& stats() const noexcept { return stats_; }

 private:
  Rational finish(const Rational& exact) {
    RoundingOutcome outcome = apply_policy(policy_, exact);
    stats_.record(outcome);
    return std::move(outcome.value);
  }

  const RoundingPolicy policy_;
  Stats stats_;
};

/// Snapshot of the counters accumulated so far.
inline Stats stats_summary(const Context& ctx) { return ctx.stats(); }

}  // namespace approxrat
