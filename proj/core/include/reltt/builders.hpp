#pragma once

#include <functional>
#include <string>

#include "reltt/context.hpp"
#include "reltt/proof.hpp"
#include "reltt/reduction.hpp"

namespace reltt {

// Proof combinators for the derived type formers. Each builder checks the
// premise proofs it is handed (under g) and returns a proof the kernel
// accepts at the advertised judgment. Precondition failures throw
// KernelError from the premise check or Error("builder-precondition").

// From q : t t1 [R] t2, a proof of t1 [{t} * R] t2.
Proof promote_intro(const Context& g, const Term& t, const Term& t1, const Proof& q,
                    std::size_t fuel = kDefaultFuel);

// From q : t [R] t2, a proof of t1 [[t]R] t2, for any t1.
Proof int_typing_l(const Context& g, const Term& t, const Term& t1, const Proof& q,
                   std::size_t fuel = kDefaultFuel);

// From q : t a [R] t2 b (up to conversion), a proof of a [t . R . t2] b.
Proof conj_intro(const Context& g, const Term& t, const Term& t2, const Term& a, const Term& b,
                 const Proof& q, std::size_t fuel = kDefaultFuel);

// Given the assumption proof u : x [R] x' and the two subject names, the
// body of a function proof.
using BodyBuilder = std::function<Proof(const Proof& u, const Term& x, const Term& x2)>;

// Body must prove x [R'] x'. Result: t1 [R <= R'] t2.
Proof subset_intro(const Context& g, const Term& t1, const Term& t2, const RelType& r,
                   const RelType& r2, const BodyBuilder& body, std::size_t fuel = kDefaultFuel);

// Body must prove t1 [R'] t2 without mentioning x, x'. Result: t1 [R => R'] t2.
Proof impprod_intro(const Context& g, const Term& t1, const Term& t2, const RelType& r,
                    const RelType& r2, const BodyBuilder& body, std::size_t fuel = kDefaultFuel);

// u : tt [Bool] ff, v : x [R] x', w : y [R] y'.
Context fig3_context(const RelType& r);
// Proves x [R] y' under fig3_context(r).
Proof fig3(const RelType& r);

// Experimental: from p : t1 [R <= R'] t2 and q : a [R] b, attempts a proof of
// a [R'] b. Rewriting the middle back to K I t1 needs promotion elimination
// in the reverse direction, so the kernel currently rejects the result with
// rho-premise-mismatch.
Proof subset_elim_experimental(const Context& g, const Proof& p, const Proof& q,
                               std::size_t fuel = kDefaultFuel);

}  // namespace reltt
