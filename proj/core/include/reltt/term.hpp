#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "reltt/names.hpp"

namespace reltt {

// Pure untyped lambda term in locally nameless form: free variables carry
// names, bound variables are de Bruijn indices, and every abstraction keeps
// its surface name as a display hint only. Two terms are alpha-equivalent
// exactly when they are structurally equal ignoring hints.
//
// Terms are immutable and share structure; copying a Term is cheap.
class Term {
 public:
  enum class Kind : std::uint8_t { Free, Bound, Lam, App };

  static Term var(std::string name);
  static Term bound(std::size_t index);
  // Abstracts every free occurrence of `binder` in `body`.
  static Term lam(std::string_view binder, const Term& body);
  // `body` already refers to the new binder as index 0.
  static Term lam_nameless(std::string hint, Term body);
  static Term app(Term fn, Term arg);
  static Term apply(Term fn, std::initializer_list<Term> args);

  Kind kind() const;
  bool is_free() const { return kind() == Kind::Free; }
  bool is_bound() const { return kind() == Kind::Bound; }
  bool is_lam() const { return kind() == Kind::Lam; }
  bool is_app() const { return kind() == Kind::App; }

  // Variable name for Free, binder hint for Lam.
  const std::string& name() const;
  std::size_t index() const;
  const Term& body() const;
  const Term& fn() const;
  const Term& arg() const;

  std::size_t size() const;
  // One more than the largest dangling de Bruijn index; 0 when locally closed.
  std::size_t loose() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool alpha_eq(const Term& a, const Term& b);

NameSet free_vars(const Term& t);
bool occurs_free(std::string_view name, const Term& t);
// Free names plus every binder hint; a superset useful for picking names.
void collect_names(const Term& t, NameSet& out);

// [replacement/var]target. Never captures: binders are nameless.
Term subst_term(const Term& replacement, std::string_view var, const Term& target);
// Simultaneous substitution.
Term subst_terms(const std::map<std::string, Term, std::less<>>& sigma, const Term& target);

// Replaces free `name` with the index of a binder placed directly above `t`.
Term abstract(const Term& t, std::string_view name);
// Opens the outermost binder of a Lam body with `arg`: index 0 becomes `arg`
// (shifted under inner binders) and higher indices drop by one.
Term instantiate(const Term& body, const Term& arg);
Term shift(const Term& t, long delta, std::size_t cutoff = 0);
bool references_index(const Term& t, std::size_t index);

// Renames free variables and binder hints through `rename`.
Term rename_names(const Term& t, const std::function<std::string(const std::string&)>& rename);

// Standard combinators, built fresh each call.
Term identity_term();                 // \x. x
Term const_term();                    // \x. \y. x
Term compose(const Term& f, const Term& g);  // \x. f (g x)

struct Term::Node {
  Kind kind;
  std::string name;
  std::size_t index = 0;
  Term left{nullptr};
  Term right{nullptr};
  std::size_t size = 1;
  std::size_t loose = 0;
};

inline Term::Kind Term::kind() const { return node_->kind; }
inline const std::string& Term::name() const { return node_->name; }
inline std::size_t Term::index() const { return node_->index; }
inline const Term& Term::body() const { return node_->left; }
inline const Term& Term::fn() const { return node_->left; }
inline const Term& Term::arg() const { return node_->right; }
inline std::size_t Term::size() const { return node_->size; }
inline std::size_t Term::loose() const { return node_->loose; }

}  // namespace reltt
