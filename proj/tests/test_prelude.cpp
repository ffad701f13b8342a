#include <gtest/gtest.h>

#include "reltt/analysis.hpp"
#include "reltt/kernel.hpp"
#include "reltt/print.hpp"
#include "support.hpp"

using namespace reltt;
using reltt::testing::Gen;

namespace {

Term v(const char* x) { return Term::var(x); }
RelType tv(const char* x) { return RelType::var(x); }
FType fv(const std::string& x) { return FType::var(x); }
FType farrow(const FType& a, const FType& b) { return FType::arrow(a, b); }
using DK = DerivedForm::Kind;

TEST(Derived, Expansions) {
  Term t = v("t");
  EXPECT_TRUE(alpha_eq(expand({DK::IntTypeL, {t}, {tv("R")}, ""}),
                       RelType::comp(RelType::promote(Term::app(const_term(), t)), tv("R"))));
  RelType nat = expand({DK::Nat, {}, {}, ""});
  RelType one_plus_x = sum(unit_type(), tv("X"));
  EXPECT_TRUE(alpha_eq(nat, RelType::all("X", RelType::arrow(RelType::arrow(one_plus_x, tv("X")),
                                                              tv("X")))));
  RelType rec_r = expand({DK::Rec, {}, {tv("R")}, "X"});
  EXPECT_TRUE(alpha_eq(rec_r, RelType::all("X", impprod(subset(tv("R"), tv("X")), tv("X")))));
  EXPECT_THROW(expand({DK::DParam, {}, {RelType::conv(tv("X"))}, "X"}), Error);
  EXPECT_THROW(expand({DK::Subset, {}, {tv("R")}, ""}), Error);
  EXPECT_TRUE(alpha_eq(expand({DK::RelEq, {}, {tv("R"), tv("S")}, ""}),
                       RelType::comp(subset(tv("R"), tv("S")), subset(tv("S"), tv("R")))));
}

TEST(Derived, RecIsCaptureAvoiding) {
  Gen gen(41);
  for (int i = 0; i < 500; ++i) {
    RelType r = gen.type(1 + gen.below(8));
    RelType e = expand({DK::Rec, {}, {r}, "X"});
    NameSet want = free_type_vars(r);
    want.erase("X");
    ASSERT_EQ(free_type_vars(e), want) << show(r);
  }
}

TEST(Fmap, Equations) {
  EXPECT_TRUE(alpha_eq(gen_fmap("X", tv("X")), identity_term()));
  EXPECT_TRUE(alpha_eq(gen_fmap("X", tv("Y")), Term::app(const_term(), identity_term())));
  // fmap over Y -> X unfolds to \f. \a. (I f) . a . (K I f)
  Term expected = Term::lam(
      "f", Term::lam("a", compose(Term::app(identity_term(), v("f")),
                                  compose(v("a"), Term::apply(const_term(),
                                                              {identity_term(), v("f")})))));
  EXPECT_EQ(conv_check(gen_fmap("X", RelType::arrow(tv("Y"), tv("X"))), expected, 1000),
            ConvResult::Equal);
  EXPECT_TRUE(free_vars(gen_fmap("X", nat_functor("X"))).empty());
  NormalizeResult n = normalize(gen_fmap("X", tv("X")), 5);
  EXPECT_TRUE(n.normal());
  EXPECT_TRUE(alpha_eq(n.term, identity_term()));
}

// (X+ -> X-) -> [Xp/X]R -> [Xp'/X]R, assembled independently of the builder.
FType expected_type(const FmapDerivation& d, const RelType& r, Polarity p) {
  RelType plus = tv(d.x_plus.c_str()), minus = tv(d.x_minus.c_str());
  RelType from = subst_tvar(p == Polarity::Plus ? plus : minus, "X", r);
  RelType to = subst_tvar(p == Polarity::Plus ? minus : plus, "X", r);
  return FType::from(RelType::arrow(RelType::arrow(plus, minus), RelType::arrow(from, to)));
}

TEST(Fmap, Derivations) {
  struct Case {
    RelType r;
    Polarity p;
  };
  std::vector<Case> cases = {
      {tv("X"), Polarity::Plus},
      {tv("Y"), Polarity::Plus},
      {RelType::arrow(tv("Y"), tv("X")), Polarity::Plus},
      {nat_functor("X"), Polarity::Plus},
      {RelType::all("Y", RelType::arrow(tv("X"), tv("Y"))), Polarity::Minus},
  };
  for (const auto& c : cases) {
    FmapDerivation d = gen_fmap_deriv("X", c.r, c.p);
    FJudgment j = validate_f({}, d.derivation);
    EXPECT_TRUE(alpha_eq(j.type, expected_type(d, c.r, c.p))) << show(c.r);
    EXPECT_TRUE(alpha_eq(j.type, d.type)) << show(c.r);
    EXPECT_TRUE(alpha_eq(j.subject, gen_fmap("X", c.r))) << show(c.r);
  }
  FmapDerivation id = gen_fmap_deriv("X", tv("X"), Polarity::Plus);
  FType pm = farrow(fv(id.x_plus), fv(id.x_minus));
  EXPECT_TRUE(alpha_eq(id.type, farrow(pm, pm)));
  try {
    gen_fmap_deriv("X", RelType::arrow(tv("X"), tv("X")), Polarity::Plus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "polarity-violation");
  }
}

TEST(Datatypes, FoldInRebuild) {
  EXPECT_TRUE(alpha_eq(gen_fold(), Term::lam("a", Term::lam("x", Term::app(v("x"), v("a"))))));
  RelType f = nat_functor("X");
  FType nat = FType::from(nat_type());
  FType nat_f = FType::from(subst_tvar(nat_type(), "X", f));
  EXPECT_TRUE(alpha_eq(validate_f({}, gen_in_deriv("X", f)).type, farrow(nat_f, nat)));
  EXPECT_TRUE(alpha_eq(validate_f({}, gen_rebuild_deriv("X", f)).type, farrow(nat, nat)));
  FType fold_type = FType::all(
      "X", farrow(FType::from(RelType::arrow(f, tv("X"))), farrow(nat, fv("X"))));
  EXPECT_TRUE(alpha_eq(validate_f({}, gen_fold_deriv("X", f)).type, fold_type));
  EXPECT_TRUE(alpha_eq(gen_rebuild("X", f), Term::app(gen_fold(), gen_in("X", f))));
  EXPECT_THROW(gen_in_deriv("X", RelType::arrow(tv("X"), tv("X"))), Error);
  // the in-term's body applies the algebra to a mapped fold
  NormalizeResult in = normalize(gen_in("X", f), 1000);
  EXPECT_TRUE(in.normal());
}

TEST(Stdlib, EntriesCheck) {
  Stdlib lib = build_stdlib();
  EXPECT_EQ(lib.entries.size(), 17u);
  for (const auto& e : lib.entries) {
    Judgment j = check({}, e.proof);
    EXPECT_TRUE(alpha_eq(j, e.judgment)) << e.proof_name;
    EXPECT_TRUE(alpha_eq(j.left, e.term)) << e.proof_name;
    EXPECT_TRUE(alpha_eq(j.right, e.term)) << e.proof_name;
    EXPECT_TRUE(alpha_eq(j.type, e.type.rel())) << e.proof_name;
  }
  EXPECT_TRUE(alpha_eq(lib.entry("zero_nat").judgment.type, nat_type()));
  RelType nat = nat_type();
  EXPECT_TRUE(alpha_eq(lib.entry("add_nat").judgment.type,
                       RelType::arrow(nat, RelType::arrow(nat, nat))));
  EXPECT_TRUE(alpha_eq(lib.entry("tt_bool").term, const_term()));
}

TEST(Stdlib, Arithmetic) {
  Stdlib lib = build_stdlib();
  for (unsigned k = 0; k <= 4; ++k) {
    NormalizeResult n = normalize(numeral(lib, k), 10000);
    ASSERT_TRUE(n.normal());
    EXPECT_TRUE(alpha_eq(n.term, parse_term(reltt::testing::numeral_normal_form(k)))) << k;
  }
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b) {
      Term sum = Term::apply(lib.term("add"), {numeral(lib, a), numeral(lib, b)});
      EXPECT_EQ(conv_check(sum, numeral(lib, a + b), 10000), ConvResult::Equal) << a << "+" << b;
    }
  EXPECT_EQ(conv_check(Term::apply(lib.term("add"), {numeral(lib, 1), numeral(lib, 1)}),
                       numeral(lib, 3), 10000),
            ConvResult::Distinct);
}

TEST(Stdlib, PreludeTextRoundTrips) {
  Stdlib lib = build_stdlib();
  std::string text = render_prelude(lib);
  EXPECT_EQ(text, reltt::testing::read_file(reltt::testing::source_dir() / "share/prelude.rtt"));
  Env env;
  Script s = parse_script(text, env);
  ASSERT_TRUE(s.errors.empty());
  for (const auto& t : lib.terms) EXPECT_TRUE(alpha_eq(env.terms.at(t.name), t.term)) << t.name;
  EXPECT_TRUE(alpha_eq(env.types.at("Nat"), nat_type()));
}

TEST(Builders, Introductions) {
  RelType r = tv("R");
  Context g;
  g.push("q", {v("a"), r, v("b")});
  Proof p = int_typing_l(g, v("a"), v("c"), Proof::var("q"));
  EXPECT_TRUE(alpha_eq(check(g, p), Judgment{v("c"), int_type_l(v("a"), r), v("b")}));
  Proof prom = promote_intro(g, identity_term(), v("a"), Proof::var("q"));
  EXPECT_TRUE(alpha_eq(check(g, prom),
                       Judgment{v("a"), RelType::comp(RelType::promote(identity_term()), r), v("b")}));
  auto ident = [](const Proof& u, const Term&, const Term&) { return u; };
  Proof s = subset_intro(g, v("t1"), v("t2"), r, r, ident);
  EXPECT_TRUE(alpha_eq(check(g, s), Judgment{v("t1"), subset(r, r), v("t2")}));
  Context h;
  h.push("q", {Term::app(v("f"), v("a")), r, Term::app(v("f"), v("b"))});
  Proof c = conj_intro(h, v("f"), v("f"), v("a"), v("b"), Proof::var("q"));
  EXPECT_TRUE(alpha_eq(check(h, c), Judgment{v("a"), conj(v("f"), r, v("f")), v("b")}));
}

TEST(Builders, SubsetEliminationIsRejected) {
  RelType r = tv("R");
  Context g;
  g.push("q", {v("a"), r, v("b")});
  g.push("s", {v("t1"), subset(r, r), v("t2")});
  try {
    check(g, subset_elim_experimental(g, Proof::var("s"), Proof::var("q")));
    FAIL() << "subset elimination unexpectedly checked";
  } catch (const KernelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RhoPremiseMismatch);
  }
}

}  // namespace
