// Rounds a long fraction three ways and sums a few terms under a context.

#include <iostream>

#include "approxrat/approxrat.hpp"

int main() {
  using namespace approxrat;

  const Rational x = parse("3.14159265358979323846");
  std::cout << "x           = " << x << '\n';
  std::cout << "expansion   = " << to_string(cf_expand(x)) << '\n';

  const RoundingPolicy policies[] = {parse_policy("tol:D=1e-6,d=inf,M=0"), parse_policy("fslash:L=3"),
                                     parse_policy("reduct:D=4")};
  for (const auto& policy : policies) {
    const RoundingOutcome r = apply_policy(policy, x);
    std::cout << to_string(policy) << " -> " << r.value << " (k=" << r.iterations << ")\n";
  }

  Context ctx(parse_policy("tol:D=1e-12,d=inf,M=6"));
  Rational harmonic;
  for (long n = 1; n <= 30; ++n) harmonic = ctx.add(harmonic, Rational(Integer(1), Integer(n)));
  std::cout << "H_30 ~ " << harmonic << " after " << ctx.stats().round_triggered_count << " roundings\n";
  return 0;
}
