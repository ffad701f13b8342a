#include <gtest/gtest.h>

#include "reltt/print.hpp"
#include "reltt/reduction.hpp"
#include "support.hpp"

using namespace reltt;
using reltt::testing::Gen;

namespace {

Term v(const char* x) { return Term::var(x); }
Term lam(const char* x, Term b) { return Term::lam(x, b); }
Term app(Term a, Term b) { return Term::app(a, b); }
Term tt() { return lam("x", lam("y", v("x"))); }
Term ff() { return lam("x", lam("y", v("y"))); }
Term omega() {
  Term w = lam("x", app(v("x"), v("x")));
  return app(w, w);
}

TEST(Step, BetaAndEta) {
  EXPECT_TRUE(alpha_eq(*step(app(identity_term(), v("y"))), v("y")));
  EXPECT_TRUE(alpha_eq(*step(lam("x", app(v("f"), v("x")))), v("f")));
  EXPECT_FALSE(step(v("y")).has_value());
  EXPECT_FALSE(step(lam("x", app(v("x"), v("x")))).has_value());
}

TEST(Step, LeftmostOutermost) {
  // tt a b: the outer application's head is the redex tt a
  Term once = *step(app(app(tt(), v("a")), v("b")));
  EXPECT_TRUE(alpha_eq(once, app(lam("y", v("a")), v("b"))));
  EXPECT_TRUE(alpha_eq(*step(once), v("a")));
  // beta wins over eta at the same node: \x. (\y. y) x
  Term t = lam("x", app(identity_term(), v("x")));
  EXPECT_TRUE(alpha_eq(*step(t), identity_term()));
}

TEST(Normalize, FuelAccounting) {
  NormalizeResult r = normalize(app(app(const_term(), identity_term()), v("f")), 10);
  EXPECT_TRUE(r.normal());
  EXPECT_TRUE(alpha_eq(r.term, identity_term()));
  EXPECT_EQ(r.steps, 2u);
  EXPECT_FALSE(normalize(omega(), 100).normal());
  NormalizeResult z = normalize(identity_term(), 0);
  EXPECT_TRUE(z.normal());
  EXPECT_EQ(z.steps, 0u);
}

TEST(Conversion, Examples) {
  EXPECT_EQ(conv_check(app(app(tt(), v("x")), v("y")), v("x"), 5), ConvResult::Equal);
  EXPECT_EQ(conv_check(lam("x", app(identity_term(), v("x"))), identity_term(), 5),
            ConvResult::Equal);
  EXPECT_EQ(conv_check(tt(), ff(), 100), ConvResult::Distinct);
  EXPECT_EQ(conv_check(omega(), identity_term(), 1000), ConvResult::Undecided);
  EXPECT_EQ(to_string(ConvResult::Undecided), "undecided");
}

// Property: on random terms, whenever normalize finishes its result is
// normal, agrees with the evaluation-based oracle, and converts with the
// input.
TEST(ReductionProperties, AgreesWithOracle) {
  Gen gen(21);
  int compared = 0;
  for (int i = 0; i < 3000; ++i) {
    Term t = gen.term(1 + gen.below(16));
    NormalizeResult r = normalize(t, 400);
    if (!r.normal()) continue;
    ASSERT_FALSE(step(r.term).has_value());
    auto oracle = reltt::testing::nbe::normal_form(t);
    if (!oracle) continue;  // the oracle evaluates arguments eagerly
    ASSERT_TRUE(alpha_eq(*oracle, r.term)) << show(t) << " vs " << show(*oracle);
    ASSERT_EQ(conv_check(t, r.term, 800), ConvResult::Equal);
    ++compared;
  }
  EXPECT_GT(compared, 2000);
}

TEST(ReductionProperties, ConversionIsSymmetric) {
  Gen gen(22);
  for (int i = 0; i < 1000; ++i) {
    Term a = gen.term(1 + gen.below(10)), b = gen.term(1 + gen.below(10));
    ConvResult ab = conv_check(a, b, 300), ba = conv_check(b, a, 300);
    if (ab != ConvResult::Undecided && ba != ConvResult::Undecided) {
      ASSERT_EQ(ab, ba);
    }
  }
}

}  // namespace
