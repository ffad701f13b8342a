#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reltt/context.hpp"
#include "reltt/proof.hpp"
#include "reltt/systemf.hpp"

namespace reltt {

// Annotated System F expression, elaborated into an explicit derivation.
// Splice nodes insert a closed derivation, weakened into the current
// context.
struct FExpr {
  enum class Kind { Var, Lam, App, TLam, TApp, Splice };
  Kind kind;
  std::string name;
  std::optional<FType> type;
  std::vector<FExpr> kids;
  std::shared_ptr<const FDerivation> spliced;
};

FExpr ev(std::string x);
FExpr elam(std::string x, FType t, FExpr body);
FExpr eapp(FExpr f, std::initializer_list<FExpr> args);
FExpr etlam(std::string tvar, FExpr body);
FExpr etapp(FExpr e, std::initializer_list<FType> types);
FExpr esplice(FDerivation d);

FDerivation elaborate(const FContext& delta, const FExpr& e);

struct StdEntry {
  std::string proof_name;  // e.g. "add_nat"
  std::string term_name;   // e.g. "add"
  std::string type_text;   // surface text of the declared type
  Term term;
  FType type;
  FDerivation derivation;
  Proof proof;             // embedding of the derivation, closed
  Judgment judgment;       // as re-checked by the kernel
};

struct StdTermDef {
  std::string name;
  std::string source;  // surface text, may refer to earlier definitions
  Term term;
};

struct StdTypeDef {
  std::string name;
  RelType type;
};

struct Stdlib {
  std::vector<StdTypeDef> types;
  std::vector<StdTermDef> terms;
  std::vector<StdEntry> entries;

  const StdEntry& entry(std::string_view proof_name) const;
  const Term& term(std::string_view name) const;
};

// Builds every definition, validates its System F derivation, embeds it and
// re-checks the embedding with the kernel. Each call starts from scratch.
Stdlib build_stdlib(std::size_t fuel = 10000);

// Church numeral succ^k zero, as an unreduced term.
Term numeral(const Stdlib& lib, unsigned k);

// The library as a script the front end can load.
std::string render_prelude(const Stdlib& lib);

}  // namespace reltt
