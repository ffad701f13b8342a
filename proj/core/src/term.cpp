#include "reltt/term.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace reltt {

Term Term::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Free;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::bound(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bound;
  node->index = index;
  node->loose = index + 1;
  return Term(std::move(node));
}

Term Term::lam_nameless(std::string hint, Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lam;
  node->name = std::move(hint);
  node->size = body.size() + 1;
  node->loose = body.loose() > 0 ? body.loose() - 1 : 0;
  node->left = std::move(body);
  return Term(std::move(node));
}

Term Term::lam(std::string_view binder, const Term& body) {
  return lam_nameless(std::string(binder), abstract(body, binder));
}

Term Term::app(Term fn, Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->size = fn.size() + arg.size() + 1;
  node->loose = std::max(fn.loose(), arg.loose());
  node->left = std::move(fn);
  node->right = std::move(arg);
  return Term(std::move(node));
}

Term Term::apply(Term fn, std::initializer_list<Term> args) {
  for (const Term& a : args) fn = app(std::move(fn), a);
  return fn;
}

bool alpha_eq(const Term& a, const Term& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Free:
      return a.name() == b.name();
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Lam:
      return alpha_eq(a.body(), b.body());
    case Term::Kind::App:
      return alpha_eq(a.fn(), b.fn()) && alpha_eq(a.arg(), b.arg());
  }
  return false;
}

namespace {

void free_vars_into(const Term& t, NameSet& out) {
  switch (t.kind()) {
    case Term::Kind::Free:
      out.insert(t.name());
      break;
    case Term::Kind::Bound:
      break;
    case Term::Kind::Lam:
      free_vars_into(t.body(), out);
      break;
    case Term::Kind::App:
      free_vars_into(t.fn(), out);
      free_vars_into(t.arg(), out);
      break;
  }
}

// Generic bottom-up rebuild that preserves sharing when nothing changes.
template <typename F>
Term rebuild(const Term& t, std::size_t depth, const F& leaf) {
  switch (t.kind()) {
    case Term::Kind::Free:
    case Term::Kind::Bound:
      return leaf(t, depth);
    case Term::Kind::Lam: {
      Term body = rebuild(t.body(), depth + 1, leaf);
      if (body.same_node(t.body())) return t;
      return Term::lam_nameless(t.name(), std::move(body));
    }
    case Term::Kind::App: {
      Term fn = rebuild(t.fn(), depth, leaf);
      Term arg = rebuild(t.arg(), depth, leaf);
      if (fn.same_node(t.fn()) && arg.same_node(t.arg())) return t;
      return Term::app(std::move(fn), std::move(arg));
    }
  }
  throw std::logic_error("unreachable term kind");
}

}  // namespace

NameSet free_vars(const Term& t) {
  NameSet out;
  free_vars_into(t, out);
  return out;
}

bool occurs_free(std::string_view name, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name;
    case Term::Kind::Bound:
      return false;
    case Term::Kind::Lam:
      return occurs_free(name, t.body());
    case Term::Kind::App:
      return occurs_free(name, t.fn()) || occurs_free(name, t.arg());
  }
  return false;
}

void collect_names(const Term& t, NameSet& out) {
  switch (t.kind()) {
    case Term::Kind::Free:
      out.insert(t.name());
      break;
    case Term::Kind::Bound:
      break;
    case Term::Kind::Lam:
      out.insert(t.name());
      collect_names(t.body(), out);
      break;
    case Term::Kind::App:
      collect_names(t.fn(), out);
      collect_names(t.arg(), out);
      break;
  }
}

Term shift(const Term& t, long delta, std::size_t cutoff) {
  if (delta == 0 || t.loose() <= cutoff) return t;
  switch (t.kind()) {
    case Term::Kind::Free:
      return t;
    case Term::Kind::Bound:
      if (t.index() < cutoff) return t;
      return Term::bound(static_cast<std::size_t>(static_cast<long>(t.index()) + delta));
    case Term::Kind::Lam:
      return Term::lam_nameless(t.name(), shift(t.body(), delta, cutoff + 1));
    case Term::Kind::App:
      return Term::app(shift(t.fn(), delta, cutoff), shift(t.arg(), delta, cutoff));
  }
  return t;
}

namespace {

Term instantiate_at(const Term& t, const Term& arg, std::size_t depth) {
  if (t.loose() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Free:
      return t;
    case Term::Kind::Bound:
      if (t.index() == depth) return shift(arg, static_cast<long>(depth));
      if (t.index() > depth) return Term::bound(t.index() - 1);
      return t;
    case Term::Kind::Lam:
      return Term::lam_nameless(t.name(), instantiate_at(t.body(), arg, depth + 1));
    case Term::Kind::App:
      return Term::app(instantiate_at(t.fn(), arg, depth), instantiate_at(t.arg(), arg, depth));
  }
  return t;
}

}  // namespace

Term instantiate(const Term& body, const Term& arg) { return instantiate_at(body, arg, 0); }

bool references_index(const Term& t, std::size_t index) {
  if (t.loose() <= index) return false;
  switch (t.kind()) {
    case Term::Kind::Free:
      return false;
    case Term::Kind::Bound:
      return t.index() == index;
    case Term::Kind::Lam:
      return references_index(t.body(), index + 1);
    case Term::Kind::App:
      return references_index(t.fn(), index) || references_index(t.arg(), index);
  }
  return false;
}

Term abstract(const Term& t, std::string_view name) {
  return rebuild(t, 0, [&](const Term& leaf, std::size_t depth) {
    if (leaf.is_free() && leaf.name() == name) return Term::bound(depth);
    return leaf;
  });
}

Term subst_term(const Term& replacement, std::string_view var, const Term& target) {
  return rebuild(target, 0, [&](const Term& leaf, std::size_t depth) {
    if (leaf.is_free() && leaf.name() == var) return shift(replacement, static_cast<long>(depth));
    return leaf;
  });
}

Term subst_terms(const std::map<std::string, Term, std::less<>>& sigma, const Term& target) {
  if (sigma.empty()) return target;
  return rebuild(target, 0, [&](const Term& leaf, std::size_t depth) {
    if (leaf.is_free()) {
      auto it = sigma.find(leaf.name());
      if (it != sigma.end()) return shift(it->second, static_cast<long>(depth));
    }
    return leaf;
  });
}

Term rename_names(const Term& t, const std::function<std::string(const std::string&)>& rename) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return Term::var(rename(t.name()));
    case Term::Kind::Bound:
      return t;
    case Term::Kind::Lam:
      return Term::lam_nameless(rename(t.name()), rename_names(t.body(), rename));
    case Term::Kind::App:
      return Term::app(rename_names(t.fn(), rename), rename_names(t.arg(), rename));
  }
  return t;
}

Term identity_term() { return Term::lam("x", Term::var("x")); }

Term const_term() { return Term::lam("x", Term::lam("y", Term::var("x"))); }

Term compose(const Term& f, const Term& g) {
  NameSet avoid = free_vars(f);
  free_vars_into(g, avoid);
  std::string x = fresh("x", avoid);
  return Term::lam(x, Term::app(f, Term::app(g, Term::var(x))));
}

}  // namespace reltt
