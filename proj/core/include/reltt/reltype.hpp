#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "reltt/names.hpp"
#include "reltt/term.hpp"

namespace reltt {

// Relational type, locally nameless over type variables:
//   X | R -> R' | all X. R | R^ | R * R' | {t}
// Promoted terms are ordinary locally closed Terms; term variables inside
// them are free names.
class RelType {
 public:
  enum class Kind : std::uint8_t { Var, Bound, Arrow, All, Conv, Comp, Promote };

  static RelType var(std::string name);
  static RelType bound(std::size_t index);
  static RelType arrow(RelType from, RelType to);
  // Abstracts every free occurrence of type variable `binder` in `body`.
  static RelType all(std::string_view binder, const RelType& body);
  static RelType all_nameless(std::string hint, RelType body);
  static RelType conv(RelType r);
  static RelType comp(RelType left, RelType right);
  static RelType promote(Term t);

  Kind kind() const;
  // Var name or All hint.
  const std::string& name() const;
  std::size_t index() const;
  const RelType& left() const;   // Arrow domain, Comp left, Conv/All body
  const RelType& right() const;  // Arrow codomain, Comp right
  const RelType& body() const { return left(); }
  const Term& term() const;      // Promote

  std::size_t size() const;
  std::size_t loose() const;
  bool same_node(const RelType& other) const { return node_ == other.node_; }

 private:
  struct Node;
  explicit RelType(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FreeVars {
  NameSet terms;
  NameSet types;
};

bool alpha_eq(const RelType& a, const RelType& b);
FreeVars free_vars(const RelType& r);
NameSet free_type_vars(const RelType& r);
NameSet free_term_vars(const RelType& r);
bool occurs_free_tvar(std::string_view name, const RelType& r);
bool occurs_free_term(std::string_view name, const RelType& r);
// Free type variables plus every universal hint.
void collect_type_names(const RelType& r, NameSet& out);
// Term names (free and hints) appearing in promotions.
void collect_term_names(const RelType& r, NameSet& out);

// [replacement/tvar]target, capture-avoiding; promotions are untouched.
RelType subst_tvar(const RelType& replacement, std::string_view tvar, const RelType& target);
// Applies sigma to every promoted term.
RelType subst_terms_in_type(const std::map<std::string, Term, std::less<>>& sigma,
                            const RelType& target);

RelType abstract_tvar(const RelType& r, std::string_view name);
// Opens an All body with `arg` (locally closed).
RelType instantiate(const RelType& body, const RelType& arg);
// Opens an All with a fresh free variable name chosen against `avoid`.
std::pair<std::string, RelType> open_all(const RelType& all, const NameSet& avoid);

bool is_system_f(const RelType& r);

struct RelType::Node {
  Kind kind;
  std::string name;
  std::size_t index = 0;
  RelType left{nullptr};
  RelType right{nullptr};
  Term term = Term::bound(0);
  std::size_t size = 1;
  std::size_t loose = 0;
};

inline RelType::Kind RelType::kind() const { return node_->kind; }
inline const std::string& RelType::name() const { return node_->name; }
inline std::size_t RelType::index() const { return node_->index; }
inline const RelType& RelType::left() const { return node_->left; }
inline const RelType& RelType::right() const { return node_->right; }
inline const Term& RelType::term() const { return node_->term; }
inline std::size_t RelType::size() const { return node_->size; }
inline std::size_t RelType::loose() const { return node_->loose; }

}  // namespace reltt
