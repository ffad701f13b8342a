#include "reltt/proof.hpp"

#include <stdexcept>

namespace reltt {

namespace {

using Node = Proof::NodeType;

std::size_t sub_size(const std::optional<Proof>& p) { return p ? p->size() : 0; }

Node blank(Proof::Kind k, Span s) {
  Node n;
  n.kind = k;
  n.span = s;
  return n;
}

}  // namespace

// Node construction funnels through one helper so that size bookkeeping
// stays in one place.
static Proof make(Node n);

Proof::Kind Proof::kind() const { return node_->kind; }
const Span& Proof::span() const { return node_->span; }
const std::string& Proof::name() const { return node_->name; }
const std::string& Proof::name2() const { return node_->name2; }
const std::string& Proof::name3() const { return node_->name3; }
const Term& Proof::term1() const { return node_->term1.value(); }
const Term& Proof::term2() const { return node_->term2.value(); }
const RelType& Proof::type() const { return node_->type.value(); }
const Proof& Proof::sub1() const { return node_->sub1.value(); }
const Proof& Proof::sub2() const { return node_->sub2.value(); }
std::size_t Proof::size() const { return node_->size; }

struct ProofFactory {
  static Proof build(Node n) {
    n.size = 1 + sub_size(n.sub1) + sub_size(n.sub2);
    return Proof(std::make_shared<const Node>(std::move(n)));
  }
  static const Node& node(const Proof& p) { return *p.node_; }
};

static Proof make(Node n) { return ProofFactory::build(std::move(n)); }

Proof Proof::at(Span s) const {
  Node n = *node_;
  n.span = s;
  return make(std::move(n));
}

Proof Proof::var(std::string u, Span s) {
  Node n = blank(Kind::Var, s);
  n.name = std::move(u);
  return make(std::move(n));
}

Proof Proof::lam(std::string u, std::string subj_left, RelType r, std::string subj_right,
                 Proof body, Span s) {
  Node n = blank(Kind::Lam, s);
  n.name = std::move(u);
  n.name2 = std::move(subj_left);
  n.name3 = std::move(subj_right);
  n.type = std::move(r);
  n.sub1 = std::move(body);
  return make(std::move(n));
}

Proof Proof::app(Proof fn, Proof arg, Span s) {
  Node n = blank(Kind::App, s);
  n.sub1 = std::move(fn);
  n.sub2 = std::move(arg);
  return make(std::move(n));
}

Proof Proof::ty_app(Proof p, RelType r, Span s) {
  Node n = blank(Kind::TyApp, s);
  n.sub1 = std::move(p);
  n.type = std::move(r);
  return make(std::move(n));
}

Proof Proof::ty_lam(std::string tvar, Proof body, Span s) {
  Node n = blank(Kind::TyLam, s);
  n.name = std::move(tvar);
  n.sub1 = std::move(body);
  return make(std::move(n));
}

Proof Proof::conv(Term left, Proof p, Term right, Span s) {
  Node n = blank(Kind::Conv, s);
  n.term1 = std::move(left);
  n.sub1 = std::move(p);
  n.term2 = std::move(right);
  return make(std::move(n));
}

Proof Proof::conv_i(Proof p, Span s) {
  Node n = blank(Kind::ConvI, s);
  n.sub1 = std::move(p);
  return make(std::move(n));
}

Proof Proof::conv_e(Proof p, Span s) {
  Node n = blank(Kind::ConvE, s);
  n.sub1 = std::move(p);
  return make(std::move(n));
}

Proof Proof::iota(Term t, Term t2, Span s) {
  Node n = blank(Kind::Iota, s);
  n.term1 = std::move(t);
  n.term2 = std::move(t2);
  return make(std::move(n));
}

Proof Proof::rho(std::string x, Term t1, Term t2, Proof eq, Proof body, Span s) {
  Node n = blank(Kind::Rho, s);
  n.name = std::move(x);
  n.term1 = std::move(t1);
  n.term2 = std::move(t2);
  n.sub1 = std::move(eq);
  n.sub2 = std::move(body);
  return make(std::move(n));
}

Proof Proof::pair(Proof p, Proof p2, Term mid, Span s) {
  Node n = blank(Kind::Pair, s);
  n.sub1 = std::move(p);
  n.sub2 = std::move(p2);
  n.term1 = std::move(mid);
  return make(std::move(n));
}

Proof Proof::pi(Proof scrutinee, std::string x, std::string u, std::string v, Proof body,
                Span s) {
  Node n = blank(Kind::Pi, s);
  n.sub1 = std::move(scrutinee);
  n.name = std::move(x);
  n.name2 = std::move(u);
  n.name3 = std::move(v);
  n.sub2 = std::move(body);
  return make(std::move(n));
}

namespace {

bool same_opt_term(const std::optional<Term>& a, const std::optional<Term>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || alpha_eq(*a, *b);
}

bool same_opt_type(const std::optional<RelType>& a, const std::optional<RelType>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || alpha_eq(*a, *b);
}

bool same_opt_proof(const std::optional<Proof>& a, const std::optional<Proof>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || same_proof(*a, *b);
}

// Rebuilds a node with fields transformed. Callers decide scoping.
template <typename FTerm, typename FType, typename FSub>
Proof map_node(const Proof& p, const FTerm& on_term, const FType& on_type, const FSub& on_sub) {
  Node n = ProofFactory::node(p);
  if (n.term1) n.term1 = on_term(*n.term1, 1);
  if (n.term2) n.term2 = on_term(*n.term2, 2);
  if (n.type) n.type = on_type(*n.type);
  if (n.sub1) n.sub1 = on_sub(*n.sub1, 1);
  if (n.sub2) n.sub2 = on_sub(*n.sub2, 2);
  return make(std::move(n));
}

}  // namespace

bool same_proof(const Proof& a, const Proof& b) {
  const Node& x = ProofFactory::node(a);
  const Node& y = ProofFactory::node(b);
  return x.kind == y.kind && x.name == y.name && x.name2 == y.name2 && x.name3 == y.name3 &&
         same_opt_term(x.term1, y.term1) && same_opt_term(x.term2, y.term2) &&
         same_opt_type(x.type, y.type) && same_opt_proof(x.sub1, y.sub1) &&
         same_opt_proof(x.sub2, y.sub2);
}

Proof rename_free_proof_var(const Proof& p, const std::string& from, const std::string& to) {
  switch (p.kind()) {
    case Proof::Kind::Var:
      return p.name() == from ? Proof::var(to, p.span()) : p;
    case Proof::Kind::Lam:
      if (p.name() == from) return p;
      break;
    default:
      break;
  }
  auto same = [](const auto& x, int) { return x; };
  auto same_type = [](const RelType& r) { return r; };
  return map_node(p, same, same_type, [&](const Proof& sub, int which) {
    if (p.kind() == Proof::Kind::Pi && which == 2 && (p.name2() == from || p.name3() == from))
      return sub;
    return rename_free_proof_var(sub, from, to);
  });
}

Proof rename_free_term_var(const Proof& p, const std::string& from, const std::string& to) {
  const Term replacement = Term::var(to);
  const std::map<std::string, Term, std::less<>> sigma{{from, replacement}};
  const bool rho_binds = p.kind() == Proof::Kind::Rho && p.name() == from;
  return map_node(
      p,
      [&](const Term& t, int) { return rho_binds ? t : subst_term(replacement, from, t); },
      [&](const RelType& r) { return subst_terms_in_type(sigma, r); },
      [&](const Proof& sub, int which) {
        if (p.kind() == Proof::Kind::Lam && (p.name2() == from || p.name3() == from)) return sub;
        if (p.kind() == Proof::Kind::Pi && which == 2 && p.name() == from) return sub;
        return rename_free_term_var(sub, from, to);
      });
}

Proof rename_free_type_var(const Proof& p, const std::string& from, const std::string& to) {
  if (p.kind() == Proof::Kind::TyLam && p.name() == from) return p;
  const RelType replacement = RelType::var(to);
  return map_node(
      p, [](const Term& t, int) { return t; },
      [&](const RelType& r) { return subst_tvar(replacement, from, r); },
      [&](const Proof& sub, int) { return rename_free_type_var(sub, from, to); });
}

void collect_proof_names(const Proof& p, NameSet& proof_vars, NameSet& term_names,
                         NameSet& type_names) {
  const Node& n = ProofFactory::node(p);
  switch (n.kind) {
    case Proof::Kind::Var:
      proof_vars.insert(n.name);
      break;
    case Proof::Kind::Lam:
      proof_vars.insert(n.name);
      term_names.insert(n.name2);
      term_names.insert(n.name3);
      break;
    case Proof::Kind::TyLam:
      type_names.insert(n.name);
      break;
    case Proof::Kind::Rho:
      term_names.insert(n.name);
      break;
    case Proof::Kind::Pi:
      term_names.insert(n.name);
      proof_vars.insert(n.name2);
      proof_vars.insert(n.name3);
      break;
    default:
      break;
  }
  if (n.term1) collect_names(*n.term1, term_names);
  if (n.term2) collect_names(*n.term2, term_names);
  if (n.type) {
    collect_term_names(*n.type, term_names);
    collect_type_names(*n.type, type_names);
  }
  if (n.sub1) collect_proof_names(*n.sub1, proof_vars, term_names, type_names);
  if (n.sub2) collect_proof_names(*n.sub2, proof_vars, term_names, type_names);
}

NameSet free_proof_vars(const Proof& p) {
  NameSet out;
  switch (p.kind()) {
    case Proof::Kind::Var:
      out.insert(p.name());
      return out;
    case Proof::Kind::Lam:
      out = free_proof_vars(p.sub1());
      out.erase(p.name());
      return out;
    case Proof::Kind::Pi: {
      out = free_proof_vars(p.sub1());
      NameSet body = free_proof_vars(p.sub2());
      body.erase(p.name2());
      body.erase(p.name3());
      out.merge(body);
      return out;
    }
    default:
      break;
  }
  const Node& n = ProofFactory::node(p);
  if (n.sub1) out.merge(free_proof_vars(*n.sub1));
  if (n.sub2) out.merge(free_proof_vars(*n.sub2));
  return out;
}

namespace {

struct Refresher {
  NameSet used;
  std::string tag;

  std::string next() {
    std::string name = fresh(tag, used);
    used.insert(name);
    return name;
  }

  Proof run(const Proof& p) {
    Node n = ProofFactory::node(p);
    switch (n.kind) {
      case Proof::Kind::Lam: {
        std::string u = next(), x = next(), x2 = next();
        Proof body = rename_free_proof_var(*n.sub1, n.name, u);
        body = rename_free_term_var(body, n.name2, x);
        body = rename_free_term_var(body, n.name3, x2);
        n.name = u;
        n.name2 = x;
        n.name3 = x2;
        n.sub1 = run(body);
        return make(std::move(n));
      }
      case Proof::Kind::TyLam: {
        std::string x = next();
        n.sub1 = run(rename_free_type_var(*n.sub1, n.name, x));
        n.name = x;
        return make(std::move(n));
      }
      case Proof::Kind::Rho: {
        std::string x = next();
        n.term1 = subst_term(Term::var(x), n.name, *n.term1);
        n.term2 = subst_term(Term::var(x), n.name, *n.term2);
        n.name = x;
        n.sub1 = run(*n.sub1);
        n.sub2 = run(*n.sub2);
        return make(std::move(n));
      }
      case Proof::Kind::Pi: {
        std::string x = next(), u = next(), v = next();
        Proof body = rename_free_term_var(*n.sub2, n.name, x);
        body = rename_free_proof_var(body, n.name2, u);
        body = rename_free_proof_var(body, n.name3, v);
        n.name = x;
        n.name2 = u;
        n.name3 = v;
        n.sub1 = run(*n.sub1);
        n.sub2 = run(body);
        return make(std::move(n));
      }
      default:
        if (n.sub1) n.sub1 = run(*n.sub1);
        if (n.sub2) n.sub2 = run(*n.sub2);
        return make(std::move(n));
    }
  }
};

}  // namespace

Proof refresh_binders(const Proof& p, const NameSet& avoid, const std::string& tag) {
  Refresher r{avoid, tag};
  NameSet terms, types;
  collect_proof_names(p, r.used, terms, types);
  r.used.merge(terms);
  r.used.merge(types);
  return r.run(p);
}

}  // namespace reltt
