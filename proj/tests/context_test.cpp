#include <gtest/gtest.h>

#include <json.hpp>

#include "approxrat/context.hpp"
#include "support.hpp"

namespace approxrat {
namespace {

Rational R(long p, long q) { return Rational(Integer(p), Integer(q)); }

ToleranceRound hundredth(std::size_t trigger) {
  return ToleranceRound{Tolerance(R(1, 100)), Tolerance::infinity(), trigger};
}

TEST(Context, ExactPolicyIsPlainArithmetic) {
  Context ctx;
  EXPECT_EQ(ctx.add(R(1, 2), R(1, 3)), R(5, 6));
  EXPECT_EQ(ctx.stats().op_count, 1u);
  EXPECT_EQ(ctx.stats().round_triggered_count, 0u);
}

TEST(Context, RoundsResults) {
  Context ctx(hundredth(2));
  EXPECT_EQ(ctx.mul(R(355, 113), Rational(1)), R(22, 7));
  const Stats s = stats_summary(ctx);
  EXPECT_EQ(s.op_count, 1u);
  EXPECT_EQ(s.round_triggered_count, 1u);
  EXPECT_EQ(s.max_k, 1u);
  ASSERT_TRUE(s.mean_k());
  EXPECT_DOUBLE_EQ(*s.mean_k(), 1.0);
}

TEST(Context, SmallResultsUntouched) {
  Context ctx(ToleranceRound{Tolerance(R(1, 100)), Tolerance(R(1, 100)), 9});
  EXPECT_EQ(ctx.sub(R(5, 6), R(1, 3)), R(1, 2));
  EXPECT_EQ(ctx.stats().round_triggered_count, 0u);
  EXPECT_FALSE(ctx.stats().mean_k());
}

TEST(Context, DivisionByZero) {
  Context ctx;
  EXPECT_THROW(ctx.div(R(1, 2), Rational()), zero_denominator_error);
}

TEST(Context, FreshStats) {
  Context ctx;
  const Stats s = stats_summary(ctx);
  EXPECT_EQ(s.op_count, 0u);
  EXPECT_FALSE(s.mean_k());
}

TEST(Stats, MeanOfRecordedIterations) {
  Stats s;
  s.record({Rational(), true, 1});
  s.record({Rational(), true, 3});
  s.record({Rational(), false, 0});
  EXPECT_EQ(s.op_count, 3u);
  EXPECT_EQ(s.round_triggered_count, 2u);
  EXPECT_EQ(s.max_k, 3u);
  EXPECT_DOUBLE_EQ(*s.mean_k(), 2.0);

  Stats t;
  t.record({Rational(), true, 5});
  s.merge(t);
  EXPECT_EQ(s.round_triggered_count, 3u);
  EXPECT_DOUBLE_EQ(*s.mean_k(), 3.0);
}

TEST(Stats, Serialization) {
  Stats s;
  EXPECT_EQ(to_csv_row(s), "0,0,0,");
  EXPECT_TRUE(nlohmann::json(s)["mean_k"].is_null());
  s.record({Rational(), true, 1});
  s.record({Rational(), true, 2});
  EXPECT_EQ(stats_csv_header(), "op_count,round_triggered_count,max_k,mean_k");
  EXPECT_EQ(to_csv_row(s), "2,2,2,1.5");
  const nlohmann::json j = s;
  EXPECT_EQ(j["op_count"], 2);
  EXPECT_EQ(j["round_triggered_count"], 2);
  EXPECT_EQ(j["max_k"], 2);
  EXPECT_DOUBLE_EQ(j["mean_k"].get<double>(), 1.5);
}

// Random expression of the four operations evaluated twice, through the
// context and with plain rational arithmetic.
TEST(ContextProperties, ExactTransparencyAndPerOpBound) {
  testing::Generator gen(41);
  const Rational delta(Integer(1), pow10(12));
  for (int trial = 0; trial < 300; ++trial) {
    Context exact;
    Context rounded(ToleranceRound{Tolerance(delta), Tolerance::infinity(), 6});
    Rational acc_ctx = gen.signed_rational(8), acc_plain = acc_ctx;
    Rational acc_r = acc_ctx;
    for (int step = 0; step < 12; ++step) {
      Rational operand = gen.signed_rational(8);
      if (operand.is_zero()) operand = Rational(1);
      Rational plain, exact_of_rounded, via_rounded;
      switch (step % 4) {
        case 0:
          acc_ctx = exact.add(acc_ctx, operand), plain = acc_plain + operand;
          exact_of_rounded = acc_r + operand, via_rounded = rounded.add(acc_r, operand);
          break;
        case 1:
          acc_ctx = exact.sub(acc_ctx, operand), plain = acc_plain - operand;
          exact_of_rounded = acc_r - operand, via_rounded = rounded.sub(acc_r, operand);
          break;
        case 2:
          acc_ctx = exact.mul(acc_ctx, operand), plain = acc_plain * operand;
          exact_of_rounded = acc_r * operand, via_rounded = rounded.mul(acc_r, operand);
          break;
        default:
          acc_ctx = exact.div(acc_ctx, operand), plain = acc_plain / operand;
          exact_of_rounded = acc_r / operand, via_rounded = rounded.div(acc_r, operand);
      }
      acc_plain = plain;
      ASSERT_EQ(acc_ctx, acc_plain);
      ASSERT_LT(abs(via_rounded - exact_of_rounded), delta);
      acc_r = via_rounded;
    }
    const Stats s = rounded.stats();
    EXPECT_EQ(s.op_count, 12u);
    std::uint64_t total = 0;
    for (const auto& [k, count] : s.iteration_histogram) total += count;
    EXPECT_EQ(total, s.round_triggered_count);
  }
}

TEST(ContextProperties, Deterministic) {
  auto run = [] {
    Context ctx(hundredth(3));
    Rational x = R(355, 113);
    for (int i = 1; i < 40; ++i) x = ctx.add(ctx.mul(x, R(i, i + 7)), R(1, i));
    return std::pair{x, ctx.stats()};
  };
  EXPECT_EQ(run(), run());
}

}  // namespace
}  // namespace approxrat
