#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "reltt/reduction.hpp"
#include "reltt/reltype.hpp"

namespace reltt {

enum class Polarity { Plus, Minus };

inline Polarity flip(Polarity p) { return p == Polarity::Plus ? Polarity::Minus : Polarity::Plus; }
std::string_view to_string(Polarity p);

// X occurs only with polarity p in R. Bound variables count as other
// variables; promotions are polarity-neutral.
bool polarity_holds(std::string_view x, Polarity p, const RelType& r);

enum class ForallClass { PosOnly, NegOnly, Both, Neither };
std::string_view to_string(ForallClass c);

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (is forall+, is forall-). Throws AnalysisError when a promotion cannot be
// decided against I within fuel.
std::pair<bool, bool> forall_flags(const RelType& r, std::size_t fuel);
ForallClass forall_class(const RelType& r, std::size_t fuel);

// Recognizes t..S written as {t} * (S * {t}^) or ({t} * S) * {t}^.
std::optional<std::pair<Term, RelType>> match_dconj(const RelType& r);

bool is_symmetric(const RelType& r, std::size_t fuel);
bool is_simple_transitive(const RelType& r, std::size_t fuel);

}  // namespace reltt
