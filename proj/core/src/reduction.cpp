#include "reltt/reduction.hpp"

namespace reltt {

namespace {

bool is_eta_redex(const Term& t) {
  return t.is_lam() && t.body().is_app() && t.body().arg().is_bound() &&
         t.body().arg().index() == 0 && !references_index(t.body().fn(), 0);
}

}  // namespace

std::optional<Term> step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Free:
    case Term::Kind::Bound:
      return std::nullopt;
    case Term::Kind::App:
      if (t.fn().is_lam()) return instantiate(t.fn().body(), t.arg());
      if (auto fn = step(t.fn())) return Term::app(std::move(*fn), t.arg());
      if (auto arg = step(t.arg())) return Term::app(t.fn(), std::move(*arg));
      return std::nullopt;
    case Term::Kind::Lam:
      if (is_eta_redex(t)) return shift(t.body().fn(), -1);
      if (auto body = step(t.body())) return Term::lam_nameless(t.name(), std::move(*body));
      return std::nullopt;
  }
  return std::nullopt;
}

NormalizeResult normalize(const Term& t, std::size_t fuel) {
  Term cur = t;
  std::size_t used = 0;
  while (true) {
    std::optional<Term> next = step(cur);
    if (!next) return {cur, NormalizeResult::Status::Normal, used};
    if (used == fuel) return {cur, NormalizeResult::Status::FuelExhausted, used};
    cur = std::move(*next);
    ++used;
  }
}

std::string_view to_string(ConvResult r) {
  switch (r) {
    case ConvResult::Equal:
      return "equal";
    case ConvResult::Distinct:
      return "distinct";
    case ConvResult::Undecided:
      return "undecided";
  }
  return "undecided";
}

ConvResult conv_check(const Term& t1, const Term& t2, std::size_t fuel) {
  NormalizeResult a = normalize(t1, fuel);
  if (!a.normal()) return ConvResult::Undecided;
  NormalizeResult b = normalize(t2, fuel - a.steps);
  if (!b.normal()) return ConvResult::Undecided;
  return alpha_eq(a.term, b.term) ? ConvResult::Equal : ConvResult::Distinct;
}

}  // namespace reltt
