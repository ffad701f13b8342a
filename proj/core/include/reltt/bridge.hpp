#pragma once

#include <utility>

#include "reltt/context.hpp"
#include "reltt/kernel.hpp"
#include "reltt/proof.hpp"
#include "reltt/systemf.hpp"

namespace reltt {

// Church pair constructor \x. \y. \c. c x y.
Term pair_term();

// The pure lambda term underlying a proof.
Term erase_proof(const Proof& p);

// The System F type underlying a relational type: converse is dropped,
// composition becomes a Church product, promotions become all X. X -> X.
FType project_type(const RelType& r);
FContext project_ctx(const Context& g);

// System F derivation of |Gamma| |- |p| : |R|, built case by case from a
// kernel derivation.
FDerivation project_derivation(const Derivation& d);
FDerivation project_derivation(const Context& g, const Proof& p, std::size_t fuel = kDefaultFuel);

// Renames every variable, free or bound, to its dotted copy. Throws
// Error("dotted-collision") when t already contains a dotted name.
Term dot_rename(const Term& t);

// Context with one assumption x : x [T] x-dot per binding of delta.
Context embed_ctx(const FContext& delta);

// Proof of t [T] t-dot in embed_ctx(delta), by induction on d.
std::pair<Context, Proof> embed_f(const FContext& delta, const FDerivation& d);

struct SelfWitness {
  Context context;
  Proof proof;
  Judgment judgment;  // |p| [|R|] dot(|p|)
};

// Projects p to System F and embeds the projection back. The result is
// re-checked by the kernel before it is returned.
SelfWitness self_witness(const Context& g, const Proof& p, std::size_t fuel = kDefaultFuel);

}  // namespace reltt
