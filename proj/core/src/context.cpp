#include "reltt/context.hpp"

#include <stdexcept>

namespace reltt {

bool alpha_eq(const Judgment& a, const Judgment& b) {
  return alpha_eq(a.left, b.left) && alpha_eq(a.type, b.type) && alpha_eq(a.right, b.right);
}

FreeVars free_vars(const Judgment& j) {
  FreeVars out = free_vars(j.type);
  out.terms.merge(free_vars(j.left));
  out.terms.merge(free_vars(j.right));
  return out;
}

Context Context::extended(std::string u, Judgment j) const {
  Context out = *this;
  out.push(std::move(u), std::move(j));
  return out;
}

void Context::push(std::string u, Judgment j) {
  if (declares(u)) throw std::invalid_argument("proof variable declared twice: " + u);
  entries_.push_back({std::move(u), std::move(j)});
}

const Judgment* Context::lookup(std::string_view u) const {
  for (const auto& e : entries_)
    if (e.proof_var == u) return &e.judgment;
  return nullptr;
}

FreeVars Context::free_vars() const {
  FreeVars out;
  for (const auto& e : entries_) {
    FreeVars fv = reltt::free_vars(e.judgment);
    out.terms.merge(fv.terms);
    out.types.merge(fv.types);
  }
  return out;
}

NameSet Context::proof_vars() const {
  NameSet out;
  for (const auto& e : entries_) out.insert(e.proof_var);
  return out;
}

}  // namespace reltt
