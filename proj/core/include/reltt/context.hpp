#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reltt/reltype.hpp"
#include "reltt/term.hpp"

namespace reltt {

// t [R] t'
struct Judgment {
  Term left;
  RelType type;
  Term right;
};

bool alpha_eq(const Judgment& a, const Judgment& b);
FreeVars free_vars(const Judgment& j);

struct Assumption {
  std::string proof_var;
  Judgment judgment;
};

// Ordered assumptions u : t [R] t' with pairwise distinct proof variables.
class Context {
 public:
  Context() = default;

  // Throws std::invalid_argument when `u` is already declared.
  Context extended(std::string u, Judgment j) const;
  void push(std::string u, Judgment j);

  const Judgment* lookup(std::string_view u) const;
  bool declares(std::string_view u) const { return lookup(u) != nullptr; }

  const std::vector<Assumption>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Term and type variables free in any assumption (proof variables excluded).
  FreeVars free_vars() const;
  NameSet proof_vars() const;

 private:
  std::vector<Assumption> entries_;
};

}  // namespace reltt
