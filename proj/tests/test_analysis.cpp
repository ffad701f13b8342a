#include <gtest/gtest.h>

#include "reltt/analysis.hpp"
#include "reltt/print.hpp"
#include "support.hpp"

using namespace reltt;
using reltt::testing::Gen;

namespace {

RelType tv(const char* x) { return RelType::var(x); }
RelType arrow(RelType a, RelType b) { return RelType::arrow(a, b); }
const auto kPlus = Polarity::Plus;
const auto kMinus = Polarity::Minus;

TEST(Polarity, Examples) {
  RelType x = tv("X");
  EXPECT_TRUE(polarity_holds("X", kPlus, x));
  EXPECT_FALSE(polarity_holds("X", kMinus, x));
  EXPECT_FALSE(polarity_holds("X", kPlus, arrow(x, x)));
  EXPECT_TRUE(polarity_holds("X", kPlus, nat_functor("X")));
  EXPECT_FALSE(polarity_holds("X", kMinus, nat_functor("X")));
  EXPECT_TRUE(polarity_holds("X", kMinus, RelType::all("Y", arrow(x, tv("Y")))));
  // converse keeps polarity, composition needs it on both sides
  EXPECT_TRUE(polarity_holds("X", kPlus, RelType::conv(x)));
  EXPECT_TRUE(polarity_holds("X", kPlus, RelType::comp(x, tv("Y"))));
  // promotions are neutral, a bound X shadows
  EXPECT_TRUE(polarity_holds("X", kMinus, RelType::promote(Term::var("X"))));
  EXPECT_TRUE(polarity_holds("X", kMinus, RelType::all("X", x)));
}

TEST(Forall, Classes) {
  EXPECT_EQ(forall_class(RelType::all("X", arrow(tv("X"), tv("X"))), 100), ForallClass::PosOnly);
  EXPECT_EQ(forall_class(tv("X"), 100), ForallClass::Both);
  Term eta_id = Term::lam("y", Term::app(identity_term(), Term::var("y")));
  EXPECT_EQ(forall_class(RelType::promote(eta_id), 100), ForallClass::Both);
  EXPECT_EQ(forall_class(RelType::promote(const_term()), 100), ForallClass::Neither);
  RelType neg = arrow(RelType::all("X", tv("X")), tv("Y"));
  EXPECT_EQ(forall_class(neg, 100), ForallClass::NegOnly);
  EXPECT_EQ(forall_class(RelType::comp(tv("X"), tv("X")), 100), ForallClass::Neither);
  Term w = Term::lam("x", Term::app(Term::var("x"), Term::var("x")));
  EXPECT_THROW(forall_class(RelType::promote(Term::app(w, w)), 50), AnalysisError);
}

TEST(Symmetric, Examples) {
  EXPECT_TRUE(is_symmetric(RelType::conv(tv("X")), 100));
  EXPECT_FALSE(is_symmetric(RelType::comp(tv("X"), tv("X")), 100));
  EXPECT_TRUE(is_symmetric(subset(tv("X"), tv("X")), 100));
  EXPECT_TRUE(is_symmetric(nat_type(), 100));
}

TEST(Dconj, BothAssociations) {
  Term t = Term::var("t");
  RelType s = arrow(tv("X"), tv("X"));
  auto right = match_dconj(dconj(t, s));
  ASSERT_TRUE(right);
  EXPECT_TRUE(alpha_eq(right->first, t));
  EXPECT_TRUE(alpha_eq(right->second, s));
  RelType left_nested = RelType::comp(RelType::comp(RelType::promote(t), s),
                                      RelType::conv(RelType::promote(t)));
  EXPECT_TRUE(match_dconj(left_nested).has_value());
  EXPECT_FALSE(match_dconj(RelType::comp(tv("X"), tv("X"))).has_value());
}

TEST(SimpleTransitive, Examples) {
  RelType id = RelType::all("X", arrow(tv("X"), tv("X")));
  EXPECT_TRUE(is_simple_transitive(id, 100));
  EXPECT_TRUE(is_simple_transitive(arrow(id, id), 100));
  EXPECT_FALSE(is_simple_transitive(RelType::comp(tv("X"), tv("X")), 100));
  EXPECT_TRUE(is_simple_transitive(dconj(Term::var("t"), id), 100));
}

// X occurs with both polarities exactly when it does not occur free.
TEST(AnalysisProperties, BothPolaritiesIffAbsent) {
  Gen gen(31);
  for (int i = 0; i < 10000; ++i) {
    RelType r = gen.type(1 + gen.below(12));
    bool both = polarity_holds("X", kPlus, r) && polarity_holds("X", kMinus, r);
    ASSERT_EQ(both, !free_type_vars(r).count("X")) << show(r);
  }
}

// Flipping an arrow's domain flips the polarity requirement.
TEST(AnalysisProperties, ArrowFlipsDomain) {
  Gen gen(32);
  for (int i = 0; i < 3000; ++i) {
    RelType a = gen.type(1 + gen.below(6)), b = gen.type(1 + gen.below(6));
    for (Polarity p : {kPlus, kMinus}) {
      bool expect = polarity_holds("X", flip(p), a) && polarity_holds("X", p, b);
      ASSERT_EQ(polarity_holds("X", p, arrow(a, b)), expect) << show(arrow(a, b));
    }
  }
}

// On quantifier-free System F types both forall classes hold.
TEST(AnalysisProperties, QuantifierFreeTypesAreBoth) {
  Gen gen(33);
  for (int i = 0; i < 2000; ++i) {
    RelType r = gen.ftype(1 + gen.below(10));
    auto [pos, neg] = forall_flags(r, 10);
    bool has_all = show(r).find("all") != std::string::npos;
    if (!has_all) {
      ASSERT_TRUE(pos && neg) << show(r);
    }
    ASSERT_TRUE(is_symmetric(r, 10));
  }
}

}  // namespace
