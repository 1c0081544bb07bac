#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "approxrat/bounds.hpp"
#include "approxrat/context.hpp"
#include "approxrat/rational.hpp"
#include "approxrat/rounding.hpp"

namespace approxrat::bench {

struct Variant {
  std::string label;
  RoundingPolicy policy;
};

/// The eleven arithmetics compared in the sin benchmark.
inline std::vector<Variant> default_variants() {
  const Tolerance tiny(Rational(Integer(1), pow10(8)));
  const Tolerance inf = Tolerance::infinity();
  return {
      {"I", Exact{}},
      {"II", ToleranceRound{tiny, inf, 9}},
      {"III", ToleranceRound{tiny, tiny, 9}},
      {"IV", ToleranceRound{inf, tiny, 9}},
      {"V", FixedSlash{6}},
      {"VI", FixedSlash{9}},
      {"VII", FixedSlash{12}},
      {"VIII", FloatingSlash{12}},
      {"IX", FloatingSlash{15}},
      {"X", FloatingSlash{18}},
      {"XI", Reductive{9}},
  };
}

struct ExperimentConfig {
  Rational pi_approx = Rational(Integer(355), Integer(113));
  std::vector<std::size_t> m_values = {0, 1, 2, 3, 4, 5, 6};
  Rational term_threshold = Rational(Integer(1), pow10(7));
  std::vector<Variant> variants = default_variants();
  /// Worker threads for independent cells; 0 picks hardware concurrency.
  unsigned jobs = 0;

  void validate() const {
    if (term_threshold.sign() <= 0) throw std::invalid_argument("term threshold must be positive");
    if (pi_approx.sign() <= 0) throw std::invalid_argument("pi approximation must be positive");
  }
};

struct Table1Row {
  std::string variant;
  std::size_t m = 0;
  std::optional<Rational> epsilon;  // empty when the cell failed
  std::size_t s = 0;
  double t_seconds = 0;
  Stats k_stats;
  std::string failure;

  bool ok() const noexcept { return epsilon.has_value(); }
};

struct Table2Row {
  std::size_t N = 0;
  std::optional<double> mean_k;
  double predicted = 0;
  std::size_t max_k = 0;
  std::size_t bound = 0;  // iteration_bound(N)
};

/// sin(x) by its Taylor series. Each term is the previous one times
/// x/(2j+2) times x/(2j+3), negated; every multiply, divide and add goes
/// through `ctx`. A term joins the sum only while |term| >= threshold.
inline Rational taylor_sin(const Rational& x, const Rational& threshold, Context& ctx) {
  if (threshold.sign() <= 0) throw std::invalid_argument("taylor_sin: threshold must be positive");
  Rational sum;
  Rational term = x;
  for (long j = 0; abs(term) >= threshold; ++j) {
    sum = ctx.add(sum, term);
    term = ctx.mul(term, ctx.div(x, Rational(2 * j + 2)));
    term = ctx.mul(term, ctx.div(x, Rational(2 * j + 3)));
    term = -term;
  }
  return sum;
}

/// x_m = pi/6 + 2 pi m, exactly.
inline Rational sample_point(const Rational& pi_approx, std::size_t m) {
  return pi_approx / Rational(6) + Rational(2) * pi_approx * Rational(static_cast<long>(m));
}

namespace detail {

// Runs fn(i) for i in [0, n) on a small worker pool; results land by index.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

/// One cell of the sin table: fresh context, timed, failures captured.
inline Table1Row run_cell(const ExperimentConfig& cfg, const Variant& variant, std::size_t m) {
  Table1Row row;
  row.variant = variant.label;
  row.m = m;
  Context ctx(variant.policy);
  const auto start = std::chrono::steady_clock::now();
  try {
    Rational value = taylor_sin(sample_point(cfg.pi_approx, m), cfg.term_threshold, ctx);
    row.epsilon = abs(value - Rational(Integer(1), Integer(2)));
    row.s = slash_lengths(value).total;
  } catch (const unrepresentable_error& e) {
    row.failure = e.what();
  }
  row.t_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  row.k_stats = ctx.stats();
  return row;
}

/// Rows in variant-major order, then by m.
inline std::vector<Table1Row> run_table1(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t per_variant = cfg.m_values.size();
  std::vector<Table1Row> rows(cfg.variants.size() * per_variant);
  detail::parallel_for(rows.size(), cfg.jobs, [&](std::size_t i) {
    rows[i] = run_cell(cfg, cfg.variants[i / per_variant], cfg.m_values[i % per_variant]);
  });
  return rows;
}

/// Mean convergent index of tolerance rounding with absolute error 10^-N over
/// the whole sin workload of `cfg` (its variant list is ignored).
inline std::vector<Table2Row> run_table2(const ExperimentConfig& cfg, const std::vector<std::size_t>& N_values,
                                         std::size_t trigger) {
  cfg.validate();
  if (N_values.empty()) throw std::invalid_argument("run_table2: no N values");
  std::vector<Table2Row> rows(N_values.size());
  detail::parallel_for(rows.size(), cfg.jobs, [&](std::size_t i) {
    const std::size_t N = N_values[i];
    const Variant variant{"tol", ToleranceRound{Tolerance(Rational(Integer(1), pow10(N))), Tolerance::infinity(), trigger}};
    Stats total;
    for (std::size_t m : cfg.m_values) {
      Context ctx(variant.policy);
      taylor_sin(sample_point(cfg.pi_approx, m), cfg.term_threshold, ctx);
      total.merge(ctx.stats());
    }
    rows[i] = Table2Row{N, total.mean_k(), mean_iterations_estimate(N), total.max_k, iteration_bound(N)};
  });
  return rows;
}

// --- rendering ------------------------------------------------------------

/// One-significant-digit scientific rendering: 4/10^8 -> "4e-8", 0 -> "0".
inline std::string format_sci1(const Rational& value) {
  if (value.is_zero()) return "0";
  const Rational magnitude = abs(value);
  // exponent e with 10^e <= magnitude < 10^(e+1)
  long e = static_cast<long>(digit_len(magnitude.num())) - static_cast<long>(digit_len(magnitude.den()));
  auto power = [](long exp) {
    return exp >= 0 ? Rational(pow10(static_cast<std::size_t>(exp)))
                    : Rational(Integer(1), pow10(static_cast<std::size_t>(-exp)));
  };
  while (magnitude < power(e)) --e;
  while (magnitude >= power(e + 1)) ++e;
  // round half up to one digit
  const Rational scaled = magnitude / power(e) + Rational(Integer(1), Integer(2));
  Integer digit;
  mpz_fdiv_q(digit.get_mpz_t(), scaled.num().get_mpz_t(), scaled.den().get_mpz_t());
  if (digit == 10) {
    digit = 1;
    ++e;
  }
  std::string out = value.sign() < 0 ? "-" : "";
  return out + to_string(digit) + "e" + std::to_string(e);
}

namespace detail {

inline std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

inline std::string optional_fixed(const std::optional<double>& value, int decimals) {
  return value ? fixed(*value, decimals) : std::string();
}

}  // namespace detail

enum class Format { csv, markdown };

struct EmitOptions {
  Format format = Format::csv;
  /// Print epsilon as the exact fraction instead of one significant digit.
  bool exact_epsilon = false;
};

inline std::string epsilon_text(const Table1Row& row, bool exact) {
  if (!row.ok()) return "overflow";
  return exact ? format(*row.epsilon) : format_sci1(*row.epsilon);
}

inline std::string emit(const std::vector<Table1Row>& rows, const EmitOptions& opts = {}) {
  std::ostringstream os;
  if (opts.format == Format::csv) {
    os << "variant,m,epsilon,s,t_seconds,mean_k,max_k\n";
    for (const auto& r : rows) {
      os << r.variant << ',' << r.m << ',' << epsilon_text(r, opts.exact_epsilon) << ','
         << (r.ok() ? std::to_string(r.s) : std::string()) << ',' << detail::fixed(r.t_seconds, 4) << ','
         << detail::optional_fixed(r.k_stats.mean_k(), 1) << ',' << r.k_stats.max_k << '\n';
    }
    return os.str();
  }

  // Markdown: one block of rows (epsilon, s, t) per variant, one column per m.
  std::vector<std::size_t> ms;
  for (const auto& r : rows)
    if (std::find(ms.begin(), ms.end(), r.m) == ms.end()) ms.push_back(r.m);
  os << "| variant | | ";
  for (auto m : ms) os << "m=" << m << " | ";
  os << "\n|---|---|";
  for (std::size_t i = 0; i < ms.size(); ++i) os << "---|";
  os << '\n';
  for (std::size_t begin = 0; begin < rows.size();) {
    std::size_t end = begin;
    while (end < rows.size() && rows[end].variant == rows[begin].variant) ++end;
    auto line = [&](const char* name, auto cell) {
      os << "| " << (name[0] == 'e' ? rows[begin].variant : std::string()) << " | " << name << " | ";
      for (std::size_t i = begin; i < end; ++i) os << cell(rows[i]) << " | ";
      os << '\n';
    };
    line("eps", [&](const Table1Row& r) { return epsilon_text(r, opts.exact_epsilon); });
    line("s", [](const Table1Row& r) { return r.ok() ? std::to_string(r.s) : std::string("-"); });
    line("t", [](const Table1Row& r) { return detail::fixed(r.t_seconds, 3); });
    begin = end;
  }
  return os.str();
}

inline std::string emit(const std::vector<Table2Row>& rows, const EmitOptions& opts = {}) {
  std::ostringstream os;
  if (opts.format == Format::csv) {
    os << "N,mean_k,predicted_k\n";
    for (const auto& r : rows)
      os << r.N << ',' << detail::optional_fixed(r.mean_k, 1) << ',' << detail::fixed(r.predicted, 1) << '\n';
    return os.str();
  }
  os << "| N |";
  for (const auto& r : rows) os << ' ' << r.N << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < rows.size(); ++i) os << "---|";
  os << "\n| mean k |";
  for (const auto& r : rows) os << ' ' << detail::optional_fixed(r.mean_k, 1) << " |";
  os << "\n| predicted |";
  for (const auto& r : rows) os << ' ' << detail::fixed(r.predicted, 1) << " |";
  os << '\n';
  return os.str();
}

}  // namespace approxrat::bench
