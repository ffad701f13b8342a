#include <gtest/gtest.h>

#include "reltt/kernel.hpp"
#include "reltt/print.hpp"
#include "reltt/relpf.hpp"
#include "support.hpp"

using namespace reltt;

namespace {

Term v(const char* x) { return Term::var(x); }
RelType tv(const char* x) { return RelType::var(x); }
Judgment jd(Term a, RelType r, Term b) { return {a, r, b}; }

Proof identity_proof() {
  return Proof::ty_lam("X", Proof::lam("u", "x", tv("X"), "x'", Proof::var("u")));
}

ErrorKind failure(const Context& g, const Proof& p, std::size_t fuel = kDefaultFuel) {
  try {
    check(g, p, fuel);
  } catch (const KernelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "proof was accepted: " << show(p);
  return ErrorKind::DeclarationMismatch;
}

TEST(Kernel, TrueFalseDerivation) {
  RelType r = tv("R");
  Judgment j = check(fig3_context(r), fig3(r));
  EXPECT_TRUE(alpha_eq(j, jd(v("x"), r, v("y'"))));
  EXPECT_NO_THROW(check_declared(fig3_context(r), fig3(r), jd(v("x"), r, v("y'"))));
}

TEST(Kernel, IdentityProof) {
  Judgment j = check({}, identity_proof());
  RelType id = RelType::all("X", RelType::arrow(tv("X"), tv("X")));
  EXPECT_TRUE(alpha_eq(j, jd(identity_term(), id, identity_term())));
  EXPECT_EQ(show(j), "\\x. x [all X. X -> X] \\x'. x'");
  try {
    check_declared({}, identity_proof(), jd(identity_term(), bool_type(), identity_term()));
    FAIL();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DeclarationMismatch);
  }
}

TEST(Kernel, PromotionIntro) {
  Judgment j = check({}, Proof::iota(v("a"), v("f")));
  EXPECT_TRUE(alpha_eq(j, jd(v("a"), RelType::promote(v("f")), Term::app(v("f"), v("a")))));
}

TEST(Kernel, ConverseAndComposition) {
  Context g;
  g.push("p", jd(v("a"), tv("R"), v("b")));
  g.push("q", jd(v("b"), tv("S"), v("c")));
  Judgment pair = check(g, Proof::pair(Proof::var("p"), Proof::var("q"), v("b")));
  EXPECT_TRUE(alpha_eq(pair, jd(v("a"), RelType::comp(tv("R"), tv("S")), v("c"))));
  Judgment back = check(g, Proof::conv_e(Proof::conv_i(Proof::var("p"))));
  EXPECT_TRUE(alpha_eq(back, jd(v("a"), tv("R"), v("b"))));
  Context h;
  h.push("r", jd(v("a"), RelType::comp(tv("R"), tv("S")), v("c")));
  Proof swap = Proof::pi(Proof::var("r"), "m", "u", "w",
                         Proof::pair(Proof::conv_i(Proof::var("w")),
                                     Proof::conv_i(Proof::var("u")), v("m")));
  Judgment j = check(h, swap);
  EXPECT_TRUE(alpha_eq(j, jd(v("c"), RelType::comp(RelType::conv(tv("S")), RelType::conv(tv("R"))),
                             v("a"))));
}

TEST(Kernel, PromotionElimination) {
  Context g;
  g.push("e", jd(v("t"), RelType::promote(v("f")), v("c")));
  g.push("q", jd(Term::app(v("f"), v("t")), tv("R"), v("d")));
  Proof p = Proof::rho("z", v("z"), v("d"), Proof::var("e"), Proof::var("q"));
  EXPECT_TRUE(alpha_eq(check(g, p), jd(v("c"), tv("R"), v("d"))));
}

TEST(Kernel, ErrorKinds) {
  Context g;
  g.push("u", jd(v("a"), tv("R"), v("b")));
  g.push("f", jd(v("g"), RelType::arrow(tv("S"), tv("T")), v("h")));
  EXPECT_EQ(failure(g, Proof::var("zz")), ErrorKind::UnboundProofVariable);
  EXPECT_EQ(failure(g, Proof::app(Proof::var("u"), Proof::var("u"))), ErrorKind::NotAnArrow);
  EXPECT_EQ(failure(g, Proof::ty_app(Proof::var("u"), tv("S"))), ErrorKind::NotAUniversal);
  EXPECT_EQ(failure(g, Proof::rho("z", v("z"), v("b"), Proof::var("u"), Proof::var("u"))),
            ErrorKind::NotAPromotion);
  EXPECT_EQ(failure(g, Proof::pi(Proof::var("u"), "m", "p", "q", Proof::var("p"))),
            ErrorKind::NotAComposition);
  EXPECT_EQ(failure(g, Proof::conv_e(Proof::var("u"))), ErrorKind::NotAConverse);
  EXPECT_EQ(failure(g, Proof::app(Proof::var("f"), Proof::var("u"))), ErrorKind::TypeMismatch);
  EXPECT_EQ(failure(g, Proof::conv(v("c"), Proof::var("u"), v("b"))), ErrorKind::ConversionFailed);
  Term w = Term::lam("x", Term::app(v("x"), v("x")));
  EXPECT_EQ(failure(g, Proof::conv(v("a"), Proof::var("u"), Term::app(w, w)), 50),
            ErrorKind::ConversionUndecided);
  EXPECT_EQ(failure(g, Proof::lam("p", "a", tv("R"), "a'", Proof::var("p"))),
            ErrorKind::FreshnessViolation);
  EXPECT_EQ(failure(g, Proof::lam("u", "x", tv("R"), "x'", Proof::var("u"))),
            ErrorKind::FreshnessViolation);
  EXPECT_EQ(failure(g, Proof::lam("p", "x", tv("R"), "x", Proof::var("p"))),
            ErrorKind::FreshnessViolation);
  EXPECT_EQ(failure(g, Proof::ty_lam("R", Proof::var("u"))), ErrorKind::FreshnessViolation);
  EXPECT_EQ(failure(g, Proof::pair(Proof::var("u"), Proof::var("u"), v("b"))),
            ErrorKind::PairMidMismatch);
  Context h = g;
  h.push("e", jd(v("t"), RelType::promote(v("k")), v("c")));
  EXPECT_EQ(failure(h, Proof::rho("z", v("z"), v("b"), Proof::var("e"), Proof::var("u"))),
            ErrorKind::RhoPremiseMismatch);
  h.push("r", jd(v("a"), RelType::comp(tv("R"), tv("R")), v("b")));
  EXPECT_EQ(failure(h, Proof::pi(Proof::var("r"), "a", "p", "q", Proof::var("p"))),
            ErrorKind::FreshnessViolation);
}

TEST(Kernel, ErrorKindNames) {
  EXPECT_EQ(to_string(ErrorKind::FreshnessViolation), "freshness-violation");
  EXPECT_EQ(to_string(ErrorKind::RhoPremiseMismatch), "rho-premise-mismatch");
  EXPECT_EQ(rule_name(Proof::Kind::TyApp), "all-elim");
}

TEST(RelPf, Shapes) {
  RelType r = tv("R");
  RelPfNode tree = to_relpf(fig3_context(r), fig3(r));
  std::vector<std::string> spine = {"conversion", "->-elim", "->-elim", "all-elim", "assumption"};
  EXPECT_EQ(main_spine(tree), spine);
  EXPECT_EQ(tree.size(), 7u);
  EXPECT_EQ(tree.context.size(), 3u);

  RelPfNode axiom = to_relpf({}, Proof::iota(v("a"), v("f")));
  EXPECT_EQ(axiom.size(), 1u);
  EXPECT_EQ(axiom.rule, "promotion-intro");

  std::vector<std::string> id_spine = {"all-intro", "->-intro", "assumption"};
  EXPECT_EQ(main_spine(to_relpf({}, identity_proof())), id_spine);
}

// Every corpus proof checks at its declared judgment, and renaming its
// binders or weakening its context leaves the judgment unchanged.
TEST(KernelProperties, CorpusStableUnderRenamingAndWeakening) {
  for (const auto& c : reltt::testing::corpus()) {
    Judgment j = check_declared(c.context, c.proof, c.judgment);
    NameSet avoid;
    FreeVars fv = c.context.free_vars();
    avoid.insert(fv.terms.begin(), fv.terms.end());
    avoid.insert(fv.types.begin(), fv.types.end());
    Proof renamed = refresh_binders(c.proof, avoid, "n");
    ASSERT_TRUE(alpha_eq(check(c.context, renamed), j)) << c.name;
    Context wider = c.context;
    wider.push(fresh("unused", c.context.proof_vars()), jd(v("unused_l"), tv("Unused"), v("unused_r")));
    ASSERT_TRUE(alpha_eq(check(wider, c.proof), j)) << c.name;
  }
}

}  // namespace
