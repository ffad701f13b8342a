#pragma once

#include <string>

#include "reltt/context.hpp"
#include "reltt/proof.hpp"
#include "reltt/reltype.hpp"
#include "reltt/term.hpp"

namespace reltt {

// ASCII surface rendering. Output re-parses to an alpha-equal value; bound
// names come from binder hints, suffixed when they would capture or shadow.
std::string show(const Term& t);
std::string show(const RelType& r);
std::string show(const Judgment& j);
std::string show(const Proof& p);
// "(u : t [R] t', ...)"
std::string show(const Context& g);

}  // namespace reltt
