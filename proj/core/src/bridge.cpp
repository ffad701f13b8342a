#include "reltt/bridge.hpp"

#include "reltt/print.hpp"

namespace reltt {

Term pair_term() {
  Term x = Term::var("x"), y = Term::var("y"), c = Term::var("c");
  return Term::lam("x", Term::lam("y", Term::lam("c", Term::apply(c, {x, y}))));
}

Term erase_proof(const Proof& p) {
  switch (p.kind()) {
    case Proof::Kind::Var:
      return Term::var(p.name());
    case Proof::Kind::Lam:
      return Term::lam(p.name(), erase_proof(p.sub1()));
    case Proof::Kind::App:
      return Term::app(erase_proof(p.sub1()), erase_proof(p.sub2()));
    case Proof::Kind::TyApp:
    case Proof::Kind::TyLam:
    case Proof::Kind::Conv:
    case Proof::Kind::ConvI:
    case Proof::Kind::ConvE:
      return erase_proof(p.sub1());
    case Proof::Kind::Iota:
      return identity_term();
    case Proof::Kind::Rho:
      return erase_proof(p.sub2());
    case Proof::Kind::Pair:
      return Term::apply(pair_term(), {erase_proof(p.sub1()), erase_proof(p.sub2())});
    case Proof::Kind::Pi:
      return Term::app(erase_proof(p.sub1()),
                       Term::lam(p.name2(), Term::lam(p.name3(), erase_proof(p.sub2()))));
  }
  return identity_term();
}

namespace {

RelType identity_type() {
  return RelType::all_nameless("X", RelType::arrow(RelType::bound(0), RelType::bound(0)));
}

// forall Z. (a -> b -> Z) -> Z for locally closed a and b.
RelType product(const RelType& a, const RelType& b) {
  RelType z = RelType::bound(0);
  return RelType::all_nameless("Z", RelType::arrow(RelType::arrow(a, RelType::arrow(b, z)), z));
}

RelType project(const RelType& r) {
  switch (r.kind()) {
    case RelType::Kind::Var:
    case RelType::Kind::Bound:
      return r;
    case RelType::Kind::Arrow:
      return RelType::arrow(project(r.left()), project(r.right()));
    case RelType::Kind::All: {
      auto [x, body] = open_all(r, {});
      RelType out = RelType::all(x, project(body));
      return RelType::all_nameless(r.name(), out.body());
    }
    case RelType::Kind::Conv:
      return project(r.body());
    case RelType::Kind::Comp:
      return product(project(r.left()), project(r.right()));
    case RelType::Kind::Promote:
      return identity_type();
  }
  return r;
}

}  // namespace

FType project_type(const RelType& r) { return FType::from(project(r)); }

FContext project_ctx(const Context& g) {
  FContext out;
  for (const auto& e : g.entries()) out.push(e.proof_var, project_type(e.judgment.type));
  return out;
}

namespace {

NameSet context_names(const Context& g) {
  NameSet out = g.proof_vars();
  FreeVars fv = g.free_vars();
  out.merge(fv.terms);
  out.merge(fv.types);
  for (const auto& e : g.entries()) collect_type_names(e.judgment.type, out);
  return out;
}

FDerivation project_node(const Derivation& d) {
  const Proof& p = d.proof;
  auto sub = [&](std::size_t i) { return project_node(d.premises.at(i)); };
  switch (p.kind()) {
    case Proof::Kind::Var:
      return fvar(p.name());
    case Proof::Kind::Lam:
      return fabs(p.name(), project_type(p.type()), sub(0));
    case Proof::Kind::App:
      return fapp(sub(0), sub(1));
    case Proof::Kind::TyApp:
      return finst(sub(0), project_type(p.type()));
    case Proof::Kind::TyLam:
      return fgen(p.name(), sub(0));
    case Proof::Kind::Conv:
    case Proof::Kind::ConvI:
    case Proof::Kind::ConvE:
      return sub(0);
    case Proof::Kind::Rho:
      return sub(1);
    case Proof::Kind::Iota: {
      NameSet avoid = context_names(d.context);
      std::string x = fresh("x", avoid);
      std::string tv = fresh("X", avoid);
      return fgen(tv, fabs(x, FType::var(tv), fvar(x)));
    }
    case Proof::Kind::Pair: {
      FType a = project_type(d.premises[0].judgment.type);
      FType b = project_type(d.premises[1].judgment.type);
      NameSet avoid = context_names(d.context);
      collect_type_names(a.rel(), avoid);
      collect_type_names(b.rel(), avoid);
      std::string x = fresh("x", avoid);
      avoid.insert(x);
      std::string y = fresh("y", avoid);
      avoid.insert(y);
      std::string c = fresh("c", avoid);
      std::string z = fresh("Z", avoid);
      FType zt = FType::var(z);
      FDerivation mk = fabs(
          x, a,
          fabs(y, b,
               fgen(z, fabs(c, FType::arrow(a, FType::arrow(b, zt)),
                            fapp(fapp(fvar(c), fvar(x)), fvar(y))))));
      return fapp(fapp(std::move(mk), sub(0)), sub(1));
    }
    case Proof::Kind::Pi: {
      const RelType& comp = d.premises[0].judgment.type;
      FType result = project_type(d.judgment.type);
      FDerivation handler = fabs(p.name2(), project_type(comp.left()),
                                 fabs(p.name3(), project_type(comp.right()), sub(1)));
      return fapp(finst(sub(0), result), std::move(handler));
    }
  }
  throw Error("rule-mismatch", "unknown proof form");
}

}  // namespace

FDerivation project_derivation(const Derivation& d) { return project_node(d); }

FDerivation project_derivation(const Context& g, const Proof& p, std::size_t fuel) {
  return project_node(derive(g, p, fuel));
}

Term dot_rename(const Term& t) {
  NameSet names;
  collect_names(t, names);
  for (const auto& n : names)
    if (is_dotted(n)) throw Error("dotted-collision", "term already mentions dotted name " + n);
  return rename_names(t, [](const std::string& n) { return dotted(n); });
}

Context embed_ctx(const FContext& delta) {
  Context out;
  for (const auto& b : delta.entries()) {
    if (is_dotted(b.var)) throw Error("dotted-collision", "context declares dotted name " + b.var);
    out.push(b.var, {Term::var(b.var), b.type.rel(), Term::var(dotted(b.var))});
  }
  return out;
}

namespace {

Proof embed_node(const FDerivation& d) {
  switch (d.rule) {
    case FDerivation::Rule::Var:
      return Proof::var(d.name);
    case FDerivation::Rule::Abs:
      if (is_dotted(d.name)) throw Error("dotted-collision", "binder " + d.name + " is dotted");
      return Proof::lam(d.name, d.name, d.type->rel(), dotted(d.name), embed_node(d.premises[0]));
    case FDerivation::Rule::App:
      return Proof::app(embed_node(d.premises[0]), embed_node(d.premises[1]));
    case FDerivation::Rule::Gen:
      return Proof::ty_lam(d.name, embed_node(d.premises[0]));
    case FDerivation::Rule::Inst:
      return Proof::ty_app(embed_node(d.premises[0]), d.type->rel());
  }
  throw Error("rule-mismatch", "unknown System F rule");
}

}  // namespace

std::pair<Context, Proof> embed_f(const FContext& delta, const FDerivation& d) {
  validate_f(delta, d);
  return {embed_ctx(delta), embed_node(d)};
}

SelfWitness self_witness(const Context& g, const Proof& p, std::size_t fuel) {
  Derivation d = derive(g, p, fuel);
  FDerivation fd = project_derivation(d);
  FContext delta = project_ctx(g);
  auto [ctx, q] = embed_f(delta, fd);
  Judgment j = check(ctx, q, fuel);
  Term erased = erase_proof(p);
  Judgment expected{erased, project_type(d.judgment.type).rel(), dot_rename(erased)};
  if (!alpha_eq(j, expected))
    throw Error("witness-mismatch",
                "embedded projection proves " + show(j) + ", expected " + show(expected));
  return {std::move(ctx), std::move(q), std::move(j)};
}

}  // namespace reltt
