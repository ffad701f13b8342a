#include "reltt/kernel.hpp"

#include "reltt/print.hpp"

namespace reltt {

std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnboundProofVariable:
      return "unbound-proof-variable";
    case ErrorKind::NotAnArrow:
      return "not-an-arrow";
    case ErrorKind::NotAUniversal:
      return "not-a-universal";
    case ErrorKind::NotAPromotion:
      return "not-a-promotion";
    case ErrorKind::NotAComposition:
      return "not-a-composition";
    case ErrorKind::NotAConverse:
      return "not-a-converse";
    case ErrorKind::TypeMismatch:
      return "type-mismatch";
    case ErrorKind::ConversionFailed:
      return "conversion-failed";
    case ErrorKind::ConversionUndecided:
      return "conversion-undecided";
    case ErrorKind::FreshnessViolation:
      return "freshness-violation";
    case ErrorKind::RhoPremiseMismatch:
      return "rho-premise-mismatch";
    case ErrorKind::PairMidMismatch:
      return "pair-mid-mismatch";
    case ErrorKind::DeclarationMismatch:
      return "declaration-mismatch";
  }
  return "unknown";
}

std::string_view rule_name(Proof::Kind k) {
  switch (k) {
    case Proof::Kind::Var:
      return "assumption";
    case Proof::Kind::Lam:
      return "->-intro";
    case Proof::Kind::App:
      return "->-elim";
    case Proof::Kind::TyApp:
      return "all-elim";
    case Proof::Kind::TyLam:
      return "all-intro";
    case Proof::Kind::Conv:
      return "conversion";
    case Proof::Kind::ConvI:
      return "converse-intro";
    case Proof::Kind::ConvE:
      return "converse-elim";
    case Proof::Kind::Iota:
      return "promotion-intro";
    case Proof::Kind::Rho:
      return "promotion-elim";
    case Proof::Kind::Pair:
      return "composition-intro";
    case Proof::Kind::Pi:
      return "composition-elim";
  }
  return "?";
}

namespace {

class Checker {
 public:
  explicit Checker(std::size_t fuel) : fuel_(fuel) {}

  Derivation run(const Context& g, const Proof& p) {
    Derivation d{p, g, Judgment{Term::bound(0), RelType::bound(0), Term::bound(0)}, {}};
    d.judgment = infer(g, p, d.premises);
    return d;
  }

 private:
  std::size_t fuel_;

  [[noreturn]] static void fail(ErrorKind kind, const Proof& p, const std::string& msg) {
    throw KernelError(kind, p.span(), std::string(rule_name(p.kind())), msg);
  }

  const Judgment& premise(std::vector<Derivation>& out, const Context& g, const Proof& p) {
    out.push_back(run(g, p));
    return out.back().judgment;
  }

  void convert(const Proof& p, const Term& have, const Term& want, const char* side) {
    switch (conv_check(have, want, fuel_)) {
      case ConvResult::Equal:
        return;
      case ConvResult::Distinct:
        fail(ErrorKind::ConversionFailed, p,
             std::string(side) + " subject " + show(have) + " is not beta-eta equal to " +
                 show(want));
      case ConvResult::Undecided:
        fail(ErrorKind::ConversionUndecided, p,
             std::string(side) + " subjects " + show(have) + " and " + show(want) +
                 " not decided within fuel " + std::to_string(fuel_));
    }
  }

  static void require_fresh_proof_var(const Context& g, const Proof& p, const std::string& u) {
    if (g.declares(u))
      fail(ErrorKind::FreshnessViolation, p, "proof variable " + u + " is already in the context");
  }

  Judgment infer(const Context& g, const Proof& p, std::vector<Derivation>& prem) {
    switch (p.kind()) {
      case Proof::Kind::Var: {
        const Judgment* j = g.lookup(p.name());
        if (!j) fail(ErrorKind::UnboundProofVariable, p, "unbound proof variable " + p.name());
        return *j;
      }
      case Proof::Kind::Lam:
        return lam(g, p, prem);
      case Proof::Kind::App: {
        Judgment f = premise(prem, g, p.sub1());
        Judgment a = premise(prem, g, p.sub2());
        if (f.type.kind() != RelType::Kind::Arrow)
          fail(ErrorKind::NotAnArrow, p, "expected an arrow type, got " + show(f.type));
        if (!alpha_eq(f.type.left(), a.type))
          fail(ErrorKind::TypeMismatch, p,
               "argument has type " + show(a.type) + " but the function expects " +
                   show(f.type.left()));
        return {Term::app(f.left, a.left), f.type.right(), Term::app(f.right, a.right)};
      }
      case Proof::Kind::TyApp: {
        Judgment j = premise(prem, g, p.sub1());
        if (j.type.kind() != RelType::Kind::All)
          fail(ErrorKind::NotAUniversal, p, "expected a universal type, got " + show(j.type));
        return {j.left, instantiate(j.type.body(), p.type()), j.right};
      }
      case Proof::Kind::TyLam: {
        if (g.free_vars().types.count(p.name()))
          fail(ErrorKind::FreshnessViolation, p,
               "type variable " + p.name() + " is free in the context");
        Judgment j = premise(prem, g, p.sub1());
        return {j.left, RelType::all(p.name(), j.type), j.right};
      }
      case Proof::Kind::Conv: {
        Judgment j = premise(prem, g, p.sub1());
        convert(p, j.left, p.term1(), "left");
        convert(p, j.right, p.term2(), "right");
        return {p.term1(), j.type, p.term2()};
      }
      case Proof::Kind::ConvI: {
        Judgment j = premise(prem, g, p.sub1());
        return {j.right, RelType::conv(j.type), j.left};
      }
      case Proof::Kind::ConvE: {
        Judgment j = premise(prem, g, p.sub1());
        if (j.type.kind() != RelType::Kind::Conv)
          fail(ErrorKind::NotAConverse, p, "expected a converse type, got " + show(j.type));
        return {j.right, j.type.body(), j.left};
      }
      case Proof::Kind::Iota:
        return {p.term1(), RelType::promote(p.term2()), Term::app(p.term2(), p.term1())};
      case Proof::Kind::Rho:
        return rho(g, p, prem);
      case Proof::Kind::Pair: {
        Judgment a = premise(prem, g, p.sub1());
        Judgment b = premise(prem, g, p.sub2());
        if (!alpha_eq(a.right, b.left))
          fail(ErrorKind::PairMidMismatch, p,
               "left component ends at " + show(a.right) + " but right component starts at " +
                   show(b.left));
        if (!alpha_eq(a.right, p.term1()))
          fail(ErrorKind::PairMidMismatch, p,
               "declared middle " + show(p.term1()) + " differs from " + show(a.right));
        return {a.left, RelType::comp(a.type, b.type), b.right};
      }
      case Proof::Kind::Pi:
        return pi(g, p, prem);
    }
    fail(ErrorKind::TypeMismatch, p, "unknown proof form");
  }

  Judgment lam(const Context& g, const Proof& p, std::vector<Derivation>& prem) {
    const std::string& u = p.name();
    const std::string& x = p.name2();
    const std::string& x2 = p.name3();
    require_fresh_proof_var(g, p, u);
    if (x == x2)
      fail(ErrorKind::FreshnessViolation, p, "subject binders must differ, both are " + x);
    FreeVars around = g.free_vars();
    NameSet dom = free_term_vars(p.type());
    for (const std::string* b : {&x, &x2}) {
      if (around.terms.count(*b))
        fail(ErrorKind::FreshnessViolation, p, "subject binder " + *b + " is free in the context");
      if (dom.count(*b))
        fail(ErrorKind::FreshnessViolation, p,
             "subject binder " + *b + " is free in the domain " + show(p.type()));
    }
    Context inner = g.extended(u, {Term::var(x), p.type(), Term::var(x2)});
    Judgment j = premise(prem, inner, p.sub1());
    NameSet cod = free_term_vars(j.type);
    for (const std::string* b : {&x, &x2})
      if (cod.count(*b))
        fail(ErrorKind::FreshnessViolation, p,
             "subject binder " + *b + " is free in the codomain " + show(j.type));
    // Each side may only depend on its own binder.
    if (occurs_free(x, j.right))
      fail(ErrorKind::FreshnessViolation, p,
           "left binder " + x + " is free in the right subject " + show(j.right));
    if (occurs_free(x2, j.left))
      fail(ErrorKind::FreshnessViolation, p,
           "right binder " + x2 + " is free in the left subject " + show(j.left));
    return {Term::lam(x, j.left), RelType::arrow(p.type(), j.type), Term::lam(x2, j.right)};
  }

  Judgment rho(const Context& g, const Proof& p, std::vector<Derivation>& prem) {
    Judgment eq = premise(prem, g, p.sub1());
    if (eq.type.kind() != RelType::Kind::Promote)
      fail(ErrorKind::NotAPromotion, p, "expected a promotion type, got " + show(eq.type));
    const std::string& x = p.name();
    Term before = Term::app(eq.type.term(), eq.left);
    Judgment want_l = {subst_term(before, x, p.term1()), eq.type, subst_term(before, x, p.term2())};
    Judgment body = premise(prem, g, p.sub2());
    if (!alpha_eq(body.left, want_l.left) || !alpha_eq(body.right, want_l.right))
      fail(ErrorKind::RhoPremiseMismatch, p,
           "second premise proves " + show(body) + " but the guide expects subjects " +
               show(want_l.left) + " and " + show(want_l.right));
    return {subst_term(eq.right, x, p.term1()), body.type, subst_term(eq.right, x, p.term2())};
  }

  Judgment pi(const Context& g, const Proof& p, std::vector<Derivation>& prem) {
    Judgment s = premise(prem, g, p.sub1());
    if (s.type.kind() != RelType::Kind::Comp)
      fail(ErrorKind::NotAComposition, p, "expected a composition type, got " + show(s.type));
    const std::string& x = p.name();
    const std::string& u = p.name2();
    const std::string& v = p.name3();
    require_fresh_proof_var(g, p, u);
    require_fresh_proof_var(g, p, v);
    if (u == v) fail(ErrorKind::FreshnessViolation, p, "proof variables must differ, both are " + u);
    auto clash = [&](bool hit, const std::string& where) {
      if (hit)
        fail(ErrorKind::FreshnessViolation, p, "middle variable " + x + " is free in " + where);
    };
    clash(g.free_vars().terms.count(x) > 0, "the context");
    clash(occurs_free(x, s.left) || occurs_free(x, s.right), "the scrutinized subjects");
    clash(occurs_free_term(x, s.type), "the scrutinized type");
    Context inner = g.extended(u, {s.left, s.type.left(), Term::var(x)})
                        .extended(v, {Term::var(x), s.type.right(), s.right});
    Judgment j = premise(prem, inner, p.sub2());
    clash(occurs_free(x, j.left) || occurs_free(x, j.right), "the concluded subjects");
    clash(occurs_free_term(x, j.type), "the concluded type");
    return j;
  }
};

}  // namespace

Derivation derive(const Context& g, const Proof& p, std::size_t fuel) {
  return Checker(fuel).run(g, p);
}

Judgment check(const Context& g, const Proof& p, std::size_t fuel) {
  return derive(g, p, fuel).judgment;
}

Judgment check_declared(const Context& g, const Proof& p, const Judgment& declared,
                        std::size_t fuel) {
  Judgment j = check(g, p, fuel);
  if (!alpha_eq(j, declared))
    throw KernelError(ErrorKind::DeclarationMismatch, p.span(), "declaration",
                      "proof establishes " + show(j) + " but " + show(declared) +
                          " was declared");
  return j;
}

}  // namespace reltt
