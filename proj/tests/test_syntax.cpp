#include <gtest/gtest.h>

#include "reltt/context.hpp"
#include "reltt/kernel.hpp"
#include "reltt/print.hpp"
#include "reltt/proof.hpp"
#include "support.hpp"

using namespace reltt;
using reltt::testing::Gen;

namespace {

Term v(const char* x) { return Term::var(x); }
Term lam(const char* x, Term b) { return Term::lam(x, b); }
Term app(Term a, Term b) { return Term::app(a, b); }
RelType tv(const char* x) { return RelType::var(x); }

TEST(Names, FreshSkipsTaken) {
  EXPECT_EQ(fresh("x", {}), "x");
  EXPECT_NE(fresh("x", {"x"}), "x");
  EXPECT_EQ(fresh("x", {"x", "x1"}), "x2");
  EXPECT_TRUE(is_dotted(dotted("x")));
  EXPECT_FALSE(is_dotted("x"));
}

TEST(Terms, AlphaEquivalence) {
  EXPECT_TRUE(alpha_eq(lam("x", v("x")), lam("y", v("y"))));
  EXPECT_FALSE(alpha_eq(lam("x", lam("y", v("x"))), lam("x", lam("y", v("y")))));
  EXPECT_FALSE(alpha_eq(lam("x", v("y")), lam("x", v("z"))));
}

TEST(Terms, SubstitutionAvoidsCapture) {
  // [z/y](\x. y) = \x. z
  EXPECT_TRUE(alpha_eq(subst_term(v("z"), "y", lam("x", v("y"))), lam("x", v("z"))));
  // [x/y](\x. y) = \x'. x, the binder may not capture x
  Term r = subst_term(v("x"), "y", lam("x", v("y")));
  EXPECT_TRUE(alpha_eq(r, lam("w", v("x"))));
  EXPECT_EQ(free_vars(r), NameSet{"x"});
  // [tt/b](b u v) = tt u v
  Term tt = lam("x", lam("y", v("x")));
  EXPECT_TRUE(alpha_eq(subst_term(tt, "b", app(app(v("b"), v("u")), v("v"))),
                       app(app(tt, v("u")), v("v"))));
}

TEST(Terms, FreeVariables) {
  EXPECT_EQ(free_vars(lam("x", app(v("x"), v("y")))), NameSet{"y"});
  EXPECT_TRUE(occurs_free("y", lam("x", v("y"))));
  EXPECT_FALSE(occurs_free("x", lam("x", v("x"))));
}

TEST(Types, SubstitutionAndFreeVars) {
  RelType boolean = bool_type();
  EXPECT_TRUE(alpha_eq(subst_tvar(boolean, "X", RelType::arrow(tv("X"), tv("X"))),
                       RelType::arrow(boolean, boolean)));
  // [Y/X](all Y. X -> Y) = all Y'. Y -> Y'
  RelType r = subst_tvar(tv("Y"), "X", RelType::all("Y", RelType::arrow(tv("X"), tv("Y"))));
  EXPECT_TRUE(alpha_eq(r, RelType::all("W", RelType::arrow(tv("Y"), tv("W")))));
  // promotions are untouched by type substitution
  RelType p = RelType::promote(v("t"));
  EXPECT_TRUE(alpha_eq(subst_tvar(tv("R"), "X", p), p));

  Term k = const_term();
  std::map<std::string, Term, std::less<>> sigma{{"x", identity_term()}};
  EXPECT_TRUE(alpha_eq(subst_terms_in_type(sigma, RelType::promote(app(k, v("x")))),
                       RelType::promote(app(k, identity_term()))));
  RelType arrow = RelType::arrow(tv("X"), tv("X"));
  EXPECT_TRUE(alpha_eq(subst_terms_in_type(sigma, arrow), arrow));
  std::map<std::string, Term, std::less<>> zero{{"n", v("zero")}};
  EXPECT_TRUE(alpha_eq(subst_terms_in_type(zero, int_type_l(v("n"), nat_type())),
                       int_type_l(v("zero"), nat_type())));

  EXPECT_TRUE(alpha_eq(RelType::all("X", RelType::arrow(tv("X"), tv("X"))),
                       RelType::all("Y", RelType::arrow(tv("Y"), tv("Y")))));
  FreeVars fv = free_vars(RelType::all("X", RelType::arrow(tv("X"), tv("Y"))));
  EXPECT_TRUE(fv.terms.empty());
  EXPECT_EQ(fv.types, NameSet{"Y"});
  FreeVars fp = free_vars(RelType::comp(RelType::promote(app(k, v("z"))), tv("X")));
  EXPECT_EQ(fp.terms, NameSet{"z"});
  EXPECT_EQ(fp.types, NameSet{"X"});
}

TEST(Types, Printing) {
  EXPECT_EQ(show(RelType::all("X", RelType::arrow(tv("X"), tv("X")))), "all X. X -> X");
  EXPECT_EQ(show(RelType::conv(RelType::comp(tv("R"), tv("S")))), "(R * S)^");
  EXPECT_EQ(show(RelType::comp(RelType::conv(tv("R")), tv("S"))), "R^ * S");
  EXPECT_EQ(show(RelType::arrow(RelType::arrow(tv("A"), tv("B")), tv("C"))), "(A -> B) -> C");
  EXPECT_EQ(show(lam("x", app(v("f"), lam("y", v("y"))))), "\\x. f (\\y. y)");
}

TEST(Context, RejectsDuplicateProofVariables) {
  Context g;
  g.push("u", {v("a"), tv("R"), v("b")});
  EXPECT_THROW(g.push("u", {v("a"), tv("R"), v("b")}), std::invalid_argument);
  EXPECT_TRUE(g.declares("u"));
  EXPECT_EQ(g.free_vars().terms, (NameSet{"a", "b"}));
}

// Property: locally nameless terms are alpha-invariant under renaming of
// binder hints, and substitution of a fresh variable is undone by
// substituting back.
TEST(SyntaxProperties, RenamingHintsPreservesAlpha) {
  Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    Term t = gen.term(1 + gen.below(14));
    NameSet fv = free_vars(t);
    Term renamed = rename_names(t, [&](const std::string& n) {
      return fv.count(n) ? n : n + "_h";
    });
    ASSERT_TRUE(alpha_eq(t, renamed)) << show(t);
    std::string w = fresh("w", fv);
    Term there = subst_term(Term::var(w), "x", t);
    Term back = subst_term(Term::var("x"), w, there);
    ASSERT_TRUE(alpha_eq(t, back)) << show(t);
  }
}

TEST(SyntaxProperties, AbstractInstantiateRoundTrip) {
  Gen gen(12);
  for (int i = 0; i < 2000; ++i) {
    Term t = gen.term(1 + gen.below(14));
    Term opened = instantiate(abstract(t, "x"), Term::var("x"));
    ASSERT_TRUE(alpha_eq(t, opened)) << show(t);
  }
}

TEST(Proofs, RefreshKeepsStructure) {
  Proof p = Proof::ty_lam("X", Proof::lam("u", "x", tv("X"), "x'", Proof::var("u")));
  Proof q = refresh_binders(p, {"u", "x", "X"}, "r");
  EXPECT_EQ(q.size(), p.size());
  EXPECT_NE(q.name(), "X");
  EXPECT_NE(q.sub1().name(), "u");
  EXPECT_NE(q.sub1().name2(), "x");
  EXPECT_TRUE(alpha_eq(check({}, q), check({}, p)));
}

}  // namespace
