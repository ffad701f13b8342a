#include "reltt/builders.hpp"

#include "reltt/error.hpp"
#include "reltt/kernel.hpp"
#include "reltt/prelude.hpp"

namespace reltt {

namespace {

Term k_app(const Term& t) { return Term::app(const_term(), t); }

void add_all(NameSet& out, const NameSet& in) { out.insert(in.begin(), in.end()); }

NameSet context_names(const Context& g) {
  NameSet out = g.proof_vars();
  FreeVars fv = g.free_vars();
  add_all(out, fv.terms);
  add_all(out, fv.types);
  return out;
}

// Shared shape of subset and implicit-product introduction: a function proof
// between two abstractions, conjugated on both sides by `outer`.
Proof conj_function(const Context& g, const Term& outer, const Term& t1, const Term& t2,
                    const RelType& r, const RelType& r2, const BodyBuilder& body,
                    std::size_t fuel) {
  NameSet avoid = context_names(g);
  add_all(avoid, free_vars(t1));
  add_all(avoid, free_vars(t2));
  collect_term_names(r, avoid);
  collect_term_names(r2, avoid);
  collect_type_names(r, avoid);
  collect_type_names(r2, avoid);
  std::string u = fresh("u", avoid);
  avoid.insert(u);
  std::string x = fresh("x", avoid);
  avoid.insert(x);
  std::string x2 = fresh("x'", avoid);
  Proof inner = Proof::lam(u, x, r, x2, body(Proof::var(u), Term::var(x), Term::var(x2)));
  return conj_intro(g, outer, outer, t1, t2, inner, fuel);
}

}  // namespace

Proof promote_intro(const Context& g, const Term& t, const Term& t1, const Proof& q,
                    std::size_t fuel) {
  Judgment j = check(g, q, fuel);
  Proof intro = Proof::conv(t1, Proof::iota(t1, t), j.left);
  return Proof::pair(intro, q, j.left);
}

Proof int_typing_l(const Context& g, const Term& t, const Term& t1, const Proof& q,
                   std::size_t fuel) {
  return promote_intro(g, k_app(t), t1, q, fuel);
}

Proof conj_intro(const Context& g, const Term& t, const Term& t2, const Term& a, const Term& b,
                 const Proof& q, std::size_t fuel) {
  check(g, q, fuel);
  Term ta = Term::app(t, a);
  Term tb = Term::app(t2, b);
  Proof middle = Proof::conv(ta, q, tb);
  Proof back = Proof::conv_i(Proof::iota(b, t2));
  return Proof::pair(Proof::iota(a, t), Proof::pair(middle, back, tb), ta);
}

Proof subset_intro(const Context& g, const Term& t1, const Term& t2, const RelType& r,
                   const RelType& r2, const BodyBuilder& body, std::size_t fuel) {
  return conj_function(g, k_app(identity_term()), t1, t2, r, r2, body, fuel);
}

Proof impprod_intro(const Context& g, const Term& t1, const Term& t2, const RelType& r,
                    const RelType& r2, const BodyBuilder& body, std::size_t fuel) {
  return conj_function(g, const_term(), t1, t2, r, r2, body, fuel);
}

Context fig3_context(const RelType& r) {
  Term tt = Term::lam("x", Term::lam("y", Term::var("x")));
  Term ff = Term::lam("x", Term::lam("y", Term::var("y")));
  Context g;
  g.push("u", {tt, bool_type(), ff});
  g.push("v", {Term::var("x"), r, Term::var("x'")});
  g.push("w", {Term::var("y"), r, Term::var("y'")});
  return g;
}

Proof fig3(const RelType& r) {
  Proof body = Proof::app(Proof::app(Proof::ty_app(Proof::var("u"), r), Proof::var("v")),
                          Proof::var("w"));
  return Proof::conv(Term::var("x"), body, Term::var("y'"));
}

Proof subset_elim_experimental(const Context& g, const Proof& p, const Proof& q,
                               std::size_t fuel) {
  Judgment jp = check(g, p, fuel);
  Judgment jq = check(g, q, fuel);
  NameSet avoid = context_names(g);
  FreeVars fp = free_vars(jp), fq = free_vars(jq);
  add_all(avoid, fp.terms);
  add_all(avoid, fq.terms);
  std::string m = fresh("m", avoid);
  avoid.insert(m);
  std::string n = fresh("n", avoid);
  avoid.insert(n);
  std::string u1 = fresh("u", avoid);
  avoid.insert(u1);
  std::string r = fresh("r", avoid);
  avoid.insert(r);
  std::string f = fresh("f", avoid);
  avoid.insert(f);
  std::string u2 = fresh("u", avoid);
  avoid.insert(u2);
  std::string z = fresh("z", avoid);
  // f q : m a [R'] n b; the goal needs K I t1 in place of m, which is the
  // wrong way round for promotion elimination on u1 : t1 [{K I}] m.
  Proof applied = Proof::app(Proof::var(f), q);
  Proof rewrite = Proof::rho(z, Term::app(Term::var(z), jq.left), Term::app(Term::var(n), jq.right),
                             Proof::var(u1), applied);
  Proof inner = Proof::pi(Proof::var(r), n, f, u2, rewrite);
  return Proof::pi(p, m, u1, r, inner);
}

}  // namespace reltt
