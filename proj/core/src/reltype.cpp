#include "reltt/reltype.hpp"

#include <algorithm>
#include <stdexcept>

namespace reltt {

RelType RelType::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return RelType(std::move(node));
}

RelType RelType::bound(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bound;
  node->index = index;
  node->loose = index + 1;
  return RelType(std::move(node));
}

RelType RelType::arrow(RelType from, RelType to) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Arrow;
  node->size = from.size() + to.size() + 1;
  node->loose = std::max(from.loose(), to.loose());
  node->left = std::move(from);
  node->right = std::move(to);
  return RelType(std::move(node));
}

RelType RelType::all_nameless(std::string hint, RelType body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::All;
  node->name = std::move(hint);
  node->size = body.size() + 1;
  node->loose = body.loose() > 0 ? body.loose() - 1 : 0;
  node->left = std::move(body);
  return RelType(std::move(node));
}

RelType RelType::all(std::string_view binder, const RelType& body) {
  return all_nameless(std::string(binder), abstract_tvar(body, binder));
}

RelType RelType::conv(RelType r) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Conv;
  node->size = r.size() + 1;
  node->loose = r.loose();
  node->left = std::move(r);
  return RelType(std::move(node));
}

RelType RelType::comp(RelType left, RelType right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Comp;
  node->size = left.size() + right.size() + 1;
  node->loose = std::max(left.loose(), right.loose());
  node->left = std::move(left);
  node->right = std::move(right);
  return RelType(std::move(node));
}

RelType RelType::promote(Term t) {
  if (t.loose() != 0) throw std::invalid_argument("promoted term must be locally closed");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Promote;
  node->size = t.size() + 1;
  node->term = std::move(t);
  return RelType(std::move(node));
}

bool alpha_eq(const RelType& a, const RelType& b) {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case RelType::Kind::Var:
      return a.name() == b.name();
    case RelType::Kind::Bound:
      return a.index() == b.index();
    case RelType::Kind::All:
    case RelType::Kind::Conv:
      return alpha_eq(a.left(), b.left());
    case RelType::Kind::Arrow:
    case RelType::Kind::Comp:
      return alpha_eq(a.left(), b.left()) && alpha_eq(a.right(), b.right());
    case RelType::Kind::Promote:
      return alpha_eq(a.term(), b.term());
  }
  return false;
}

namespace {

template <typename F>
void visit(const RelType& r, const F& f) {
  f(r);
  switch (r.kind()) {
    case RelType::Kind::Var:
    case RelType::Kind::Bound:
    case RelType::Kind::Promote:
      break;
    case RelType::Kind::All:
    case RelType::Kind::Conv:
      visit(r.left(), f);
      break;
    case RelType::Kind::Arrow:
    case RelType::Kind::Comp:
      visit(r.left(), f);
      visit(r.right(), f);
      break;
  }
}

// Rebuilds the type, calling `leaf` on Var/Bound/Promote nodes with the
// current binder depth. Shares unchanged subtrees.
template <typename F>
RelType rebuild(const RelType& r, std::size_t depth, const F& leaf) {
  switch (r.kind()) {
    case RelType::Kind::Var:
    case RelType::Kind::Bound:
    case RelType::Kind::Promote:
      return leaf(r, depth);
    case RelType::Kind::All: {
      RelType body = rebuild(r.left(), depth + 1, leaf);
      if (body.same_node(r.left())) return r;
      return RelType::all_nameless(r.name(), std::move(body));
    }
    case RelType::Kind::Conv: {
      RelType body = rebuild(r.left(), depth, leaf);
      if (body.same_node(r.left())) return r;
      return RelType::conv(std::move(body));
    }
    case RelType::Kind::Arrow:
    case RelType::Kind::Comp: {
      RelType l = rebuild(r.left(), depth, leaf);
      RelType rr = rebuild(r.right(), depth, leaf);
      if (l.same_node(r.left()) && rr.same_node(r.right())) return r;
      return r.kind() == RelType::Kind::Arrow ? RelType::arrow(std::move(l), std::move(rr))
                                              : RelType::comp(std::move(l), std::move(rr));
    }
  }
  throw std::logic_error("unreachable type kind");
}

}  // namespace

FreeVars free_vars(const RelType& r) {
  FreeVars out;
  visit(r, [&](const RelType& n) {
    if (n.kind() == RelType::Kind::Var) out.types.insert(n.name());
    if (n.kind() == RelType::Kind::Promote) out.terms.merge(free_vars(n.term()));
  });
  return out;
}

NameSet free_type_vars(const RelType& r) { return free_vars(r).types; }
NameSet free_term_vars(const RelType& r) { return free_vars(r).terms; }

bool occurs_free_tvar(std::string_view name, const RelType& r) {
  bool found = false;
  visit(r, [&](const RelType& n) {
    if (n.kind() == RelType::Kind::Var && n.name() == name) found = true;
  });
  return found;
}

bool occurs_free_term(std::string_view name, const RelType& r) {
  bool found = false;
  visit(r, [&](const RelType& n) {
    if (!found && n.kind() == RelType::Kind::Promote) found = occurs_free(name, n.term());
  });
  return found;
}

void collect_type_names(const RelType& r, NameSet& out) {
  visit(r, [&](const RelType& n) {
    if (n.kind() == RelType::Kind::Var || n.kind() == RelType::Kind::All) out.insert(n.name());
  });
}

void collect_term_names(const RelType& r, NameSet& out) {
  visit(r, [&](const RelType& n) {
    if (n.kind() == RelType::Kind::Promote) collect_names(n.term(), out);
  });
}

RelType abstract_tvar(const RelType& r, std::string_view name) {
  return rebuild(r, 0, [&](const RelType& leaf, std::size_t depth) {
    if (leaf.kind() == RelType::Kind::Var && leaf.name() == name) return RelType::bound(depth);
    return leaf;
  });
}

RelType instantiate(const RelType& body, const RelType& arg) {
  if (arg.loose() != 0) throw std::invalid_argument("type argument must be locally closed");
  return rebuild(body, 0, [&](const RelType& leaf, std::size_t depth) {
    if (leaf.kind() != RelType::Kind::Bound) return leaf;
    if (leaf.index() == depth) return arg;
    if (leaf.index() > depth) return RelType::bound(leaf.index() - 1);
    return leaf;
  });
}

std::pair<std::string, RelType> open_all(const RelType& all, const NameSet& avoid) {
  if (all.kind() != RelType::Kind::All) throw std::invalid_argument("open_all on non-universal");
  NameSet names = avoid;
  for (auto& n : free_type_vars(all)) names.insert(n);
  std::string x = fresh(all.name(), names);
  return {x, instantiate(all.body(), RelType::var(x))};
}

RelType subst_tvar(const RelType& replacement, std::string_view tvar, const RelType& target) {
  if (replacement.loose() != 0) throw std::invalid_argument("replacement must be locally closed");
  return rebuild(target, 0, [&](const RelType& leaf, std::size_t) {
    if (leaf.kind() == RelType::Kind::Var && leaf.name() == tvar) return replacement;
    return leaf;
  });
}

RelType subst_terms_in_type(const std::map<std::string, Term, std::less<>>& sigma,
                            const RelType& target) {
  if (sigma.empty()) return target;
  return rebuild(target, 0, [&](const RelType& leaf, std::size_t) {
    if (leaf.kind() != RelType::Kind::Promote) return leaf;
    Term t = subst_terms(sigma, leaf.term());
    if (t.same_node(leaf.term())) return leaf;
    return RelType::promote(std::move(t));
  });
}

bool is_system_f(const RelType& r) {
  bool ok = true;
  visit(r, [&](const RelType& n) {
    if (n.kind() == RelType::Kind::Conv || n.kind() == RelType::Kind::Comp ||
        n.kind() == RelType::Kind::Promote)
      ok = false;
  });
  return ok;
}

}  // namespace reltt
