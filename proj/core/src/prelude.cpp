#include "reltt/prelude.hpp"

#include "reltt/print.hpp"
#include "reltt/reduction.hpp"

namespace reltt {

namespace {

// Hint for a new universal binder that reads well next to `args`.
template <typename... Types>
std::string hint(std::string_view base, const Types&... args) {
  NameSet avoid;
  (avoid.merge(free_type_vars(args)), ...);
  return fresh(base, avoid);
}

RelType all_over(const std::string& x, const RelType& body) { return RelType::all(x, body); }

void require_f(const RelType& r, const char* what) {
  if (!is_system_f(r))
    throw Error("malformed-parameter",
                std::string(what) + " needs a System F type, got " + show(r));
}

Term k_app(const Term& t) { return Term::app(const_term(), t); }

}  // namespace

RelType int_type_l(const Term& t, const RelType& r) {
  return RelType::comp(RelType::promote(k_app(t)), r);
}

RelType int_type_r(const RelType& r, const Term& t) {
  return RelType::comp(r, RelType::conv(RelType::promote(k_app(t))));
}

RelType conj(const Term& t1, const RelType& r, const Term& t2) {
  return RelType::comp(RelType::promote(t1),
                       RelType::comp(r, RelType::conv(RelType::promote(t2))));
}

RelType dconj(const Term& t, const RelType& r) { return conj(t, r, t); }

RelType subset(const RelType& r, const RelType& r2) {
  return dconj(k_app(identity_term()), RelType::arrow(r, r2));
}

RelType impprod(const RelType& r, const RelType& r2) {
  return dconj(const_term(), RelType::arrow(r, r2));
}

RelType releq(const RelType& r, const RelType& r2) {
  return RelType::comp(subset(r, r2), subset(r2, r));
}

RelType prod(const RelType& a, const RelType& b) {
  std::string x = hint("X", a, b);
  RelType v = RelType::var(x);
  return all_over(x, RelType::arrow(RelType::arrow(a, RelType::arrow(b, v)), v));
}

RelType sum(const RelType& a, const RelType& b) {
  std::string x = hint("Y", a, b);
  RelType v = RelType::var(x);
  return all_over(x, RelType::arrow(RelType::arrow(a, v),
                                    RelType::arrow(RelType::arrow(b, v), v)));
}

RelType unit_type() {
  RelType v = RelType::var("X");
  return all_over("X", RelType::arrow(v, v));
}

RelType bool_type() {
  RelType v = RelType::var("X");
  return all_over("X", RelType::arrow(v, RelType::arrow(v, v)));
}

RelType dparam(const std::string& x, const RelType& r) {
  require_f(r, "Dparam");
  RelType v = RelType::var(x);
  return all_over(x, RelType::arrow(RelType::arrow(r, v), v));
}

RelType dind(const std::string& x, const RelType& r) {
  require_f(r, "Dind");
  NormalizeResult in = normalize(gen_in(x, r), kDefaultFuel);
  if (!in.normal()) throw Error("malformed-parameter", "in-term did not normalize");
  RelType v = RelType::var(x);
  RelType guarded = int_type_l(in.term, int_type_r(RelType::arrow(r, v), in.term));
  return all_over(x, impprod(guarded, v));
}

RelType rec(const std::string& x, const RelType& r) {
  RelType v = RelType::var(x);
  return all_over(x, impprod(subset(r, v), v));
}

RelType nat_functor(const std::string& x) { return sum(unit_type(), RelType::var(x)); }

RelType nat_type() { return dparam("X", nat_functor("X")); }

RelType expand(const DerivedForm& f) {
  auto need = [&](std::size_t terms, std::size_t types, bool tvar) {
    if (f.terms.size() != terms || f.types.size() != types || tvar == f.tvar.empty())
      throw Error("malformed-parameter", "wrong arguments for derived form");
  };
  using K = DerivedForm::Kind;
  switch (f.kind) {
    case K::IntTypeL:
      need(1, 1, false);
      return int_type_l(f.terms[0], f.types[0]);
    case K::IntTypeR:
      need(1, 1, false);
      return int_type_r(f.types[0], f.terms[0]);
    case K::Conj:
      need(2, 1, false);
      return conj(f.terms[0], f.types[0], f.terms[1]);
    case K::DConj:
      need(1, 1, false);
      return dconj(f.terms[0], f.types[0]);
    case K::Subset:
      need(0, 2, false);
      return subset(f.types[0], f.types[1]);
    case K::ImpProd:
      need(0, 2, false);
      return impprod(f.types[0], f.types[1]);
    case K::RelEq:
      need(0, 2, false);
      return releq(f.types[0], f.types[1]);
    case K::Prod:
      need(0, 2, false);
      return prod(f.types[0], f.types[1]);
    case K::Sum:
      need(0, 2, false);
      return sum(f.types[0], f.types[1]);
    case K::Unit:
      need(0, 0, false);
      return unit_type();
    case K::Bool:
      need(0, 0, false);
      return bool_type();
    case K::Nat:
      need(0, 0, false);
      return nat_type();
    case K::DParam:
      need(0, 1, true);
      return dparam(f.tvar, f.types[0]);
    case K::DInd:
      need(0, 1, true);
      return dind(f.tvar, f.types[0]);
    case K::Rec:
      need(0, 1, true);
      return rec(f.tvar, f.types[0]);
  }
  throw Error("malformed-parameter", "unknown derived form");
}

Term gen_fmap(const std::string& x, const RelType& r) {
  switch (r.kind()) {
    case RelType::Kind::Var:
      if (r.name() == x) return identity_term();
      return Term::app(const_term(), identity_term());
    case RelType::Kind::Arrow: {
      Term f = Term::var("f"), a = Term::var("a");
      Term m1 = Term::app(gen_fmap(x, r.left()), f);
      Term m2 = Term::app(gen_fmap(x, r.right()), f);
      return Term::lam("f", Term::lam("a", compose(m2, compose(a, m1))));
    }
    case RelType::Kind::All: {
      NameSet avoid{x};
      auto [y, body] = open_all(r, avoid);
      return Term::lam("f", Term::app(gen_fmap(x, body), Term::var("f")));
    }
    default:
      break;
  }
  throw Error("malformed-parameter", "fmap needs a System F type, got " + show(r));
}

Term gen_fold() {
  return Term::lam("a", Term::lam("x", Term::app(Term::var("x"), Term::var("a"))));
}

Term gen_in(const std::string& x, const RelType& r) {
  Term a = Term::var("a"), v = Term::var("x");
  Term mapped = Term::apply(gen_fmap(x, r), {Term::app(gen_fold(), a), v});
  return Term::lam("x", Term::lam("a", Term::app(a, mapped)));
}

Term gen_rebuild(const std::string& x, const RelType& r) {
  return Term::app(gen_fold(), gen_in(x, r));
}

namespace {

class FmapBuilder {
 public:
  FmapBuilder(std::string x, std::string xp, std::string xm, NameSet used)
      : x_(std::move(x)), xp_(std::move(xp)), xm_(std::move(xm)), used_(std::move(used)),
        f_type_(FType::arrow(FType::var(xp_), FType::var(xm_))) {}

  RelType at(const RelType& r, Polarity p) const {
    return subst_tvar(RelType::var(p == Polarity::Plus ? xp_ : xm_), x_, r);
  }

  const FType& f_type() const { return f_type_; }

  FDerivation build(const RelType& r, Polarity p) {
    std::vector<std::string> ys;
    RelType core = r;
    while (core.kind() == RelType::Kind::All) {
      auto [y, body] = open_all(core, used_);
      used_.insert(y);
      ys.push_back(y);
      core = body;
    }
    FDerivation d = build_core(core, p, ys);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      std::string f = next("f");
      FContext ctx;
      ctx.push(f, f_type_);
      d = fabs(f, f_type_, fapp(weaken_front({}, d, ctx), fvar(f)));
    }
    return d;
  }

 private:
  std::string x_, xp_, xm_;
  NameSet used_;
  FType f_type_;

  std::string next(std::string_view base) {
    std::string n = fresh(base, used_);
    used_.insert(n);
    return n;
  }

  static RelType close_over(const std::vector<std::string>& ys, RelType r) {
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) r = RelType::all(*it, r);
    return r;
  }

  FDerivation build_core(const RelType& core, Polarity p, const std::vector<std::string>& ys) {
    if (core.kind() == RelType::Kind::Var && core.name() == x_) {
      if (!ys.empty())
        throw Error("untypable-instance",
                    "fmap over a quantifier that binds nothing around " + x_ +
                        " has no System F typing of the required shape");
      std::string z = next("z");
      return fabs(z, f_type_, fvar(z));
    }
    if (core.kind() == RelType::Kind::Var) {
      FType t = FType::from(close_over(ys, core));
      std::string a = next("x"), b = next("y"), z = next("z");
      return fapp(fabs(a, FType::arrow(t, t), fabs(b, f_type_, fvar(a))), fabs(z, t, fvar(z)));
    }
    if (core.kind() != RelType::Kind::Arrow)
      throw Error("malformed-parameter", "fmap needs a System F type, got " + show(core));

    FDerivation d1 = build(core.left(), flip(p));
    FDerivation d2 = build(core.right(), p);
    std::string f = next("f"), a = next("a"), x = next("x"), y = next("x");
    FType a_type = FType::from(close_over(ys, at(core, p)));
    FType s1 = FType::from(at(core.left(), flip(p)));

    FContext outer;
    outer.push(f, f_type_);
    outer.push(a, a_type);
    outer.push(x, s1);
    FContext inner = outer.extended(y, s1);
    FDerivation w1 = weaken_front({}, d1, inner);
    FDerivation w2 = weaken_front({}, d2, outer);

    FDerivation a_inst = fvar(a);
    for (const auto& yv : ys) a_inst = finst(std::move(a_inst), FType::var(yv));
    FDerivation pre = fabs(y, s1, fapp(std::move(a_inst), fapp(fapp(std::move(w1), fvar(f)), fvar(y))));
    FDerivation body = fapp(fapp(std::move(w2), fvar(f)), fapp(std::move(pre), fvar(x)));
    FDerivation core_d = fabs(x, s1, std::move(body));
    for (auto it = ys.rbegin(); it != ys.rend(); ++it) core_d = fgen(*it, std::move(core_d));
    return fabs(f, f_type_, fabs(a, a_type, std::move(core_d)));
  }
};

void require_positive(const std::string& x, const RelType& r) {
  if (!polarity_holds(x, Polarity::Plus, r))
    throw Error("polarity-violation", x + " does not occur only positively in " + show(r));
}

}  // namespace

FmapDerivation gen_fmap_deriv(const std::string& x, const RelType& r, Polarity p) {
  require_f(r, "fmap");
  if (!polarity_holds(x, p, r))
    throw Error("polarity-violation",
                x + " is not " + std::string(to_string(p)) + "-polar in " + show(r));
  NameSet used{x};
  collect_type_names(r, used);
  std::string xp = fresh(x + "p", used);
  used.insert(xp);
  std::string xm = fresh(x + "m", used);
  used.insert(xm);
  used.insert({"f", "a", "x", "y", "z"});
  FmapBuilder b(x, xp, xm, used);
  FDerivation d = b.build(r, p);
  FType type = FType::arrow(b.f_type(), FType::arrow(FType::from(b.at(r, p)),
                                                      FType::from(b.at(r, flip(p)))));
  FJudgment j = validate_f({}, d);
  if (!alpha_eq(j.type, type) || !alpha_eq(j.subject, gen_fmap(x, r)))
    throw Error("internal", "fmap derivation concluded " + show(j.subject) + " : " + show(j.type));
  return {std::move(d), xp, xm, type};
}

FDerivation gen_fold_deriv(const std::string& x, const RelType& r) {
  RelType d = dparam(x, r);
  FType xv = FType::var(x);
  FType alg = FType::from(RelType::arrow(r, xv.rel()));
  return fgen(x, fabs("a", alg,
                      fabs("x", FType::from(d),
                           fapp(finst(fvar("x"), xv), fvar("a")))));
}

FDerivation gen_in_deriv(const std::string& x, const RelType& r) {
  require_f(r, "in");
  require_positive(x, r);
  FType d = FType::from(dparam(x, r));
  FType xv = FType::var(x);
  FmapDerivation fm = gen_fmap_deriv(x, r, Polarity::Plus);
  FDerivation map = finst(finst(fgen(fm.x_plus, fgen(fm.x_minus, fm.derivation)), d), xv);
  FDerivation fold = finst(gen_fold_deriv(x, r), xv);

  FType arg = FType::from(subst_tvar(d.rel(), x, r));
  FType alg = FType::from(RelType::arrow(r, xv.rel()));
  FContext ctx;
  ctx.push("x", arg);
  ctx.push("a", alg);
  FDerivation w_map = weaken_front({}, map, ctx);
  FDerivation w_fold = weaken_front({}, fold, ctx);
  FDerivation body = fapp(fvar("a"), fapp(fapp(std::move(w_map), fapp(std::move(w_fold), fvar("a"))),
                                          fvar("x")));
  return fabs("x", arg, fgen(x, fabs("a", alg, std::move(body))));
}

FDerivation gen_rebuild_deriv(const std::string& x, const RelType& r) {
  FType d = FType::from(dparam(x, r));
  return fapp(finst(gen_fold_deriv(x, r), d), gen_in_deriv(x, r));
}

}  // namespace reltt
