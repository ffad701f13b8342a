#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reltt/error.hpp"
#include "reltt/reltype.hpp"
#include "reltt/term.hpp"

namespace reltt {

// A System F type: a RelType built only from variables, arrows and
// universals.
class FType {
 public:
  // Throws Error("malformed-parameter") on converse, composition or promotion.
  static FType from(const RelType& r);
  static FType var(std::string name) { return FType(RelType::var(std::move(name))); }
  static FType arrow(const FType& a, const FType& b) { return FType(RelType::arrow(a.r_, b.r_)); }
  static FType all(std::string_view x, const FType& body) { return FType(RelType::all(x, body.r_)); }

  const RelType& rel() const { return r_; }
  RelType::Kind kind() const { return r_.kind(); }
  FType left() const { return FType(r_.left()); }
  FType right() const { return FType(r_.right()); }
  // Opens a universal with `arg`.
  FType instantiate(const FType& arg) const { return FType(reltt::instantiate(r_.body(), arg.r_)); }

 private:
  explicit FType(RelType r) : r_(std::move(r)) {}
  RelType r_;
};

bool alpha_eq(const FType& a, const FType& b);
std::string show(const FType& t);

struct FBinding {
  std::string var;
  FType type;
};

// x1 : T1, ..., xn : Tn with distinct variables.
class FContext {
 public:
  FContext() = default;
  void push(std::string x, FType t);  // Error("shadowing-violation") on redeclaration
  FContext extended(std::string x, FType t) const;
  FContext inserted(std::size_t at, std::string x, FType t) const;
  const FType* lookup(std::string_view x) const;
  const std::vector<FBinding>& entries() const { return entries_; }
  NameSet free_type_vars() const;
  NameSet vars() const;

 private:
  std::vector<FBinding> entries_;
};

// Explicit Curry-style derivation. The context is implicit: each node's
// context is the root context extended by the abs binders above it.
struct FDerivation {
  enum class Rule { Var, Abs, App, Gen, Inst };
  Rule rule;
  std::string name;          // var: x; abs: binder; gen: X
  std::optional<FType> type; // abs: domain; inst: instantiation
  std::vector<FDerivation> premises;

  std::size_t size() const;
};

std::string_view to_string(FDerivation::Rule r);

FDerivation fvar(std::string x);
FDerivation fabs(std::string x, FType domain, FDerivation body);
FDerivation fapp(FDerivation fn, FDerivation arg);
FDerivation fgen(std::string tvar, FDerivation body);
FDerivation finst(FDerivation d, FType with);

struct FJudgment {
  Term subject;
  FType type;
};

// Walks d checking every node is a legal rule instance. Errors:
// rule-mismatch, unbound-variable, freshness-violation.
FJudgment validate_f(const FContext& delta, const FDerivation& d);

// Derivation of the same subject and type in `delta` with x : t inserted at
// position `at`. Inner binders that would clash are renamed. Errors:
// shadowing-violation when x is already declared in delta.
FDerivation weaken_f(const FContext& delta, const FDerivation& d, const std::string& x,
                     const FType& t, std::size_t at);
// Same, inserting several bindings in order at the front of the context.
FDerivation weaken_front(const FContext& delta, const FDerivation& d, const FContext& extra);

void collect_f_names(const FDerivation& d, NameSet& terms, NameSet& types);
FDerivation rename_f_var(const FDerivation& d, const std::string& from, const std::string& to);
FDerivation rename_f_tvar(const FDerivation& d, const std::string& from, const std::string& to);

}  // namespace reltt
