#pragma once

#include <string>
#include <vector>

#include "reltt/analysis.hpp"
#include "reltt/error.hpp"
#include "reltt/reltype.hpp"
#include "reltt/systemf.hpp"
#include "reltt/term.hpp"

namespace reltt {

// Derived type formers, expanded into core types. Universal binders
// introduced here get hints that do not clash with the arguments' free
// variables, purely for readable output; capture cannot happen either way.
RelType int_type_l(const Term& t, const RelType& r);            // [t]R  = (K t) * R
RelType int_type_r(const RelType& r, const Term& t);            // R[t]  = R * (K t)^
RelType conj(const Term& t1, const RelType& r, const Term& t2);  // t1 . R . t2
RelType dconj(const Term& t, const RelType& r);                  // t .. R
RelType subset(const RelType& r, const RelType& r2);             // (K I) .. (R -> R')
RelType impprod(const RelType& r, const RelType& r2);            // K .. (R -> R')
RelType releq(const RelType& r, const RelType& r2);              // (R <= R') * (R' <= R)
RelType prod(const RelType& a, const RelType& b);                // all X. (A -> B -> X) -> X
RelType sum(const RelType& a, const RelType& b);                 // all X. (A -> X) -> (B -> X) -> X
RelType unit_type();                                             // all X. X -> X
RelType bool_type();                                             // all X. X -> X -> X
// all X. (R -> X) -> X. Requires a System F type.
RelType dparam(const std::string& x, const RelType& r);
// all X. ([in] (R -> X) [in]) => X with in normalized. Requires X positive
// in a System F type.
RelType dind(const std::string& x, const RelType& r);
// all X. (R <= X) => X, for any R.
RelType rec(const std::string& x, const RelType& r);
RelType nat_type();  // Dparam(X, 1 + X)
// 1 + X
RelType nat_functor(const std::string& x);

struct DerivedForm {
  enum class Kind {
    IntTypeL, IntTypeR, Conj, DConj, Subset, ImpProd, RelEq,
    Prod, Sum, Unit, Bool, Nat, DParam, DInd, Rec,
  };
  Kind kind;
  std::vector<Term> terms;
  std::vector<RelType> types;
  std::string tvar;
};

// Throws Error("malformed-parameter") for missing arguments or non-F
// parameters of DParam/DInd.
RelType expand(const DerivedForm& f);

// fmap_{X,R}, by recursion on R. Error("malformed-parameter") unless R is a
// System F type.
Term gen_fmap(const std::string& x, const RelType& r);
Term gen_fold();                                      // \a. \x. x a
Term gen_in(const std::string& x, const RelType& r);  // \x. \a. a (fmap (fold a) x)
Term gen_rebuild(const std::string& x, const RelType& r);  // fold in

struct FmapDerivation {
  FDerivation derivation;
  std::string x_plus;
  std::string x_minus;
  // (X+ -> X-) -> [Xp/X]R -> [Xp'/X]R
  FType type;
};

// Derivation of the fmap typing rule, built by induction on the polarity
// judgment. Errors: polarity-violation when X is not p-polar in R;
// malformed-parameter for non-F types; untypable-instance for vacuous
// quantification over X alone (forall Y. X), whose fmap term has no
// System F type of the required shape.
FmapDerivation gen_fmap_deriv(const std::string& x, const RelType& r, Polarity p);

// fold : all X. (R -> X) -> Dparam(X, R) -> X
FDerivation gen_fold_deriv(const std::string& x, const RelType& r);
// in : [Dparam(X, R)/X] R -> Dparam(X, R)
FDerivation gen_in_deriv(const std::string& x, const RelType& r);
// rebuild : Dparam(X, R) -> Dparam(X, R)
FDerivation gen_rebuild_deriv(const std::string& x, const RelType& r);

}  // namespace reltt
