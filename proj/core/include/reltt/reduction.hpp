#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "reltt/term.hpp"

namespace reltt {

inline constexpr std::size_t kDefaultFuel = 10000;

// One leftmost-outermost rewrite. At each node a beta redex is tried first,
// then an eta redex, then the function position, then the argument (or the
// body of an abstraction). Returns nullopt iff t is beta-eta normal.
std::optional<Term> step(const Term& t);

struct NormalizeResult {
  enum class Status { Normal, FuelExhausted };
  Term term;
  Status status;
  std::size_t steps;
  bool normal() const { return status == Status::Normal; }
};

NormalizeResult normalize(const Term& t, std::size_t fuel);

enum class ConvResult { Equal, Distinct, Undecided };

std::string_view to_string(ConvResult r);

// Normalizes t1 and then t2 out of one shared budget of `fuel` rewrite
// steps. Equal and Distinct are only reported once both sides are normal.
ConvResult conv_check(const Term& t1, const Term& t2, std::size_t fuel);

}  // namespace reltt
