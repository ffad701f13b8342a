#include "reltt/stdlib.hpp"

#include <stdexcept>

#include "reltt/bridge.hpp"
#include "reltt/kernel.hpp"
#include "reltt/prelude.hpp"
#include "reltt/print.hpp"

namespace reltt {

FExpr ev(std::string x) { return {FExpr::Kind::Var, std::move(x), std::nullopt, {}, nullptr}; }

FExpr elam(std::string x, FType t, FExpr body) {
  return {FExpr::Kind::Lam, std::move(x), std::move(t), {std::move(body)}, nullptr};
}

FExpr eapp(FExpr f, std::initializer_list<FExpr> args) {
  for (const FExpr& a : args) f = {FExpr::Kind::App, "", std::nullopt, {std::move(f), a}, nullptr};
  return f;
}

FExpr etlam(std::string tvar, FExpr body) {
  return {FExpr::Kind::TLam, std::move(tvar), std::nullopt, {std::move(body)}, nullptr};
}

FExpr etapp(FExpr e, std::initializer_list<FType> types) {
  for (const FType& t : types) e = {FExpr::Kind::TApp, "", t, {std::move(e)}, nullptr};
  return e;
}

FExpr esplice(FDerivation d) {
  return {FExpr::Kind::Splice, "", std::nullopt, {}, std::make_shared<const FDerivation>(std::move(d))};
}

FDerivation elaborate(const FContext& delta, const FExpr& e) {
  switch (e.kind) {
    case FExpr::Kind::Var:
      return fvar(e.name);
    case FExpr::Kind::Lam:
      return fabs(e.name, *e.type, elaborate(delta.extended(e.name, *e.type), e.kids[0]));
    case FExpr::Kind::App:
      return fapp(elaborate(delta, e.kids[0]), elaborate(delta, e.kids[1]));
    case FExpr::Kind::TLam:
      return fgen(e.name, elaborate(delta, e.kids[0]));
    case FExpr::Kind::TApp:
      return finst(elaborate(delta, e.kids[0]), *e.type);
    case FExpr::Kind::Splice:
      return weaken_front({}, *e.spliced, delta);
  }
  throw Error("rule-mismatch", "unknown expression form");
}

const StdEntry& Stdlib::entry(std::string_view proof_name) const {
  for (const auto& e : entries)
    if (e.proof_name == proof_name) return e;
  throw std::out_of_range("no stdlib entry " + std::string(proof_name));
}

const Term& Stdlib::term(std::string_view name) const {
  for (const auto& t : terms)
    if (t.name == name) return t.term;
  throw std::out_of_range("no stdlib term " + std::string(name));
}

namespace {

FType tv(const char* x) { return FType::var(x); }
FType arr(const FType& a, const FType& b) { return FType::arrow(a, b); }
FType arr(const FType& a, const FType& b, const FType& c) { return arr(a, arr(b, c)); }
FType sum_f(const FType& a, const FType& b) { return FType::from(sum(a.rel(), b.rel())); }
FType prod_f(const FType& a, const FType& b) { return FType::from(prod(a.rel(), b.rel())); }

class Builder {
 public:
  explicit Builder(std::size_t fuel) : fuel_(fuel) {}

  Stdlib lib;

  // Adds the term definition and its checked typing.
  void add(const std::string& proof_name, const std::string& term_name, const std::string& source,
           const std::string& type_text, const FType& type, const FDerivation& d) {
    FJudgment j = validate_f({}, d);
    if (!alpha_eq(j.type, type))
      throw Error("internal", term_name + " derivation concludes " + show(j.type));
    auto [ctx, proof] = embed_f({}, d);
    Judgment want{j.subject, type.rel(), j.subject};
    Judgment got = check_declared(ctx, proof, want, fuel_);
    lib.terms.push_back({term_name, source, j.subject});
    lib.entries.push_back({proof_name, term_name, type_text, j.subject, type, d, proof, got});
  }

  void add(const std::string& proof_name, const std::string& term_name, const std::string& source,
           const std::string& type_text, const FType& type, const FExpr& e) {
    add(proof_name, term_name, source, type_text, type, elaborate({}, e));
  }

  FDerivation deriv(std::string_view proof_name) const {
    return lib.entry(proof_name).derivation;
  }

 private:
  std::size_t fuel_;
};

}  // namespace

Stdlib build_stdlib(std::size_t fuel) {
  Builder b(fuel);
  const FType X = tv("X"), Y = tv("Y"), A = tv("A"), B = tv("B"), Z = tv("Z");
  const FType boolean = FType::from(bool_type());
  const FType unit = FType::from(unit_type());
  const FType nat = FType::from(nat_type());
  const RelType functor = nat_functor("X");
  const FType nat_f = sum_f(unit, nat);  // 1 + Nat

  b.lib.types.push_back({"Bool", bool_type()});
  b.lib.types.push_back({"Unit", unit_type()});
  b.lib.types.push_back({"Nat", nat_type()});

  b.add("id_poly", "I", "\\x. x", "all X. X -> X", FType::all("X", arr(X, X)),
        etlam("X", elam("x", X, ev("x"))));
  b.add("k_poly", "K", "\\x. \\y. x", "all X. all Y. X -> Y -> X",
        FType::all("X", FType::all("Y", arr(X, Y, X))),
        etlam("X", etlam("Y", elam("x", X, elam("y", Y, ev("x"))))));
  b.add("tt_bool", "tt", "\\x. \\y. x", "Bool", boolean,
        etlam("X", elam("x", X, elam("y", X, ev("x")))));
  b.add("ff_bool", "ff", "\\x. \\y. y", "Bool", boolean,
        etlam("X", elam("x", X, elam("y", X, ev("y")))));
  b.add("unit_unit", "unit", "I", "Unit", unit, etlam("X", elam("x", X, ev("x"))));

  const FType a_plus_b = sum_f(A, B);
  auto inject = [&](const char* which, const FType& arg) {
    return etlam("A", etlam("B", elam("a", arg, etlam("Y", elam("x", arr(A, Y), elam("y", arr(B, Y),
                                                                    eapp(ev(which), {ev("a")})))))));
  };
  b.add("inl_sum", "inl", "\\a. \\x. \\y. x a", "all A. all B. A -> all Y. (A -> Y) -> (B -> Y) -> Y",
        FType::all("A", FType::all("B", arr(A, a_plus_b))), inject("x", A));
  b.add("inr_sum", "inr", "\\a. \\x. \\y. y a", "all A. all B. B -> all Y. (A -> Y) -> (B -> Y) -> Y",
        FType::all("A", FType::all("B", arr(B, a_plus_b))), inject("y", B));
  b.add("case_sum", "case", "\\n. \\m. \\c. c n m",
        "all A. all B. all Z. (A -> Z) -> (B -> Z) -> (all Y. (A -> Y) -> (B -> Y) -> Y) -> Z",
        FType::all("A", FType::all("B", FType::all("Z", arr(arr(A, Z), arr(arr(B, Z), arr(a_plus_b, Z)))))),
        etlam("A", etlam("B", etlam("Z", elam("n", arr(A, Z), elam("m", arr(B, Z), elam("c", a_plus_b,
            eapp(etapp(ev("c"), {Z}), {ev("n"), ev("m")}))))))));

  const FType a_times_b = prod_f(A, B);
  b.add("pair_prod", "pair", "\\x. \\y. \\c. c x y",
        "all A. all B. A -> B -> all Z. (A -> B -> Z) -> Z",
        FType::all("A", FType::all("B", arr(A, B, a_times_b))),
        etlam("A", etlam("B", elam("x", A, elam("y", B, etlam("Z", elam("c", arr(A, B, Z),
            eapp(ev("c"), {ev("x"), ev("y")}))))))));
  auto project = [&](const char* which, const FType& result) {
    return etlam("A", etlam("B", elam("p", a_times_b,
        eapp(etapp(ev("p"), {result}), {elam("x", A, elam("y", B, ev(which)))}))));
  };
  b.add("fst_prod", "fst", "\\p. p (\\x. \\y. x)", "all A. all B. (all Z. (A -> B -> Z) -> Z) -> A",
        FType::all("A", FType::all("B", arr(a_times_b, A))), project("x", A));
  b.add("snd_prod", "snd", "\\p. p (\\x. \\y. y)", "all A. all B. (all Z. (A -> B -> Z) -> Z) -> B",
        FType::all("A", FType::all("B", arr(a_times_b, B))), project("y", B));

  const FType fold_type =
      FType::all("X", arr(FType::from(RelType::arrow(functor, X.rel())), arr(nat, X)));
  b.add("fold_nat", "fold", show(gen_fold()),
        "all X. ((all Y. (Unit -> Y) -> (X -> Y) -> Y) -> X) -> Nat -> X", fold_type,
        gen_fold_deriv("X", functor));
  b.add("in_nat_typing", "in_nat", show(gen_in("X", functor)),
        "(all Y. (Unit -> Y) -> (Nat -> Y) -> Y) -> Nat", arr(nat_f, nat),
        gen_in_deriv("X", functor));
  b.add("rebuild_nat_typing", "rebuild_nat", "fold in_nat", "Nat -> Nat", arr(nat, nat),
        gen_rebuild_deriv("X", functor));

  FExpr in_nat = esplice(b.deriv("in_nat_typing"));
  FExpr inl = esplice(b.deriv("inl_sum"));
  FExpr inr = esplice(b.deriv("inr_sum"));
  b.add("zero_nat", "zero", "in_nat (inl unit)", "Nat", nat,
        eapp(in_nat, {eapp(etapp(inl, {unit, nat}), {esplice(b.deriv("unit_unit"))})}));
  b.add("succ_nat", "succ", "\\x. in_nat (inr x)", "Nat -> Nat", arr(nat, nat),
        elam("x", nat, eapp(in_nat, {eapp(etapp(inr, {unit, nat}), {ev("x")})})));
  // The algebra sends the left injection to m and the right one to succ.
  b.add("add_nat", "add", "\\n. \\m. n (\\c. c (K m) succ)", "Nat -> Nat -> Nat",
        arr(nat, nat, nat),
        elam("n", nat, elam("m", nat,
            eapp(etapp(ev("n"), {nat}),
                 {elam("c", nat_f,
                       eapp(etapp(ev("c"), {nat}),
                            {eapp(etapp(esplice(b.deriv("k_poly")), {nat, unit}), {ev("m")}),
                             esplice(b.deriv("succ_nat"))}))}))));
  return std::move(b.lib);
}

Term numeral(const Stdlib& lib, unsigned k) {
  Term n = lib.term("zero");
  for (unsigned i = 0; i < k; ++i) n = Term::app(lib.term("succ"), n);
  return n;
}

std::string render_prelude(const Stdlib& lib) {
  std::string out;
  out += "-- reltt standard library.\n";
  out += "-- Generated by `reltt prelude`; regenerate rather than edit.\n";
  out += "-- Each proof is the System F typing derivation of its term, embedded as a\n";
  out += "-- relational proof of t [T] t. Names ending in a combining dot are the\n";
  out += "-- right-hand copies; #reserved admits them in this file.\n";
  out = "#reserved\n" + out + "\n";
  out += "type Bool := all X. X -> X -> X;\n";
  out += "type Unit := all X. X -> X;\n";
  out += "type Nat := Dparam(X, all Y. (Unit -> Y) -> (X -> Y) -> Y);\n";
  for (const auto& e : lib.entries) {
    const StdTermDef* def = nullptr;
    for (const auto& t : lib.terms)
      if (t.name == e.term_name) def = &t;
    out += "\nterm " + e.term_name + " := " + def->source + ";\n";
    out += "proof " + e.proof_name + " () : " + e.term_name + " [" + e.type_text + "] " +
           e.term_name + " :=\n  " + show(e.proof) + ";\n";
  }
  return out;
}

}  // namespace reltt
