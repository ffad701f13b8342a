#include "reltt/analysis.hpp"

namespace reltt {

std::string_view to_string(Polarity p) { return p == Polarity::Plus ? "+" : "-"; }

std::string_view to_string(ForallClass c) {
  switch (c) {
    case ForallClass::PosOnly:
      return "forall+";
    case ForallClass::NegOnly:
      return "forall-";
    case ForallClass::Both:
      return "forall+ and forall-";
    case ForallClass::Neither:
      return "neither";
  }
  return "neither";
}

bool polarity_holds(std::string_view x, Polarity p, const RelType& r) {
  switch (r.kind()) {
    case RelType::Kind::Var:
      return r.name() != x || p == Polarity::Plus;
    case RelType::Kind::Bound:
    case RelType::Kind::Promote:
      return true;
    case RelType::Kind::Arrow:
      return polarity_holds(x, flip(p), r.left()) && polarity_holds(x, p, r.right());
    case RelType::Kind::All:
    case RelType::Kind::Conv:
      return polarity_holds(x, p, r.left());
    case RelType::Kind::Comp:
      return polarity_holds(x, p, r.left()) && polarity_holds(x, p, r.right());
  }
  return false;
}

namespace {

bool is_identity(const Term& t, std::size_t fuel) {
  switch (conv_check(t, identity_term(), fuel)) {
    case ConvResult::Equal:
      return true;
    case ConvResult::Distinct:
      return false;
    case ConvResult::Undecided:
      break;
  }
  throw AnalysisError("promotion convertibility undecided");
}

}  // namespace

std::pair<bool, bool> forall_flags(const RelType& r, std::size_t fuel) {
  switch (r.kind()) {
    case RelType::Kind::Var:
    case RelType::Kind::Bound:
      return {true, true};
    case RelType::Kind::Arrow: {
      auto [dom_pos, dom_neg] = forall_flags(r.left(), fuel);
      auto [cod_pos, cod_neg] = forall_flags(r.right(), fuel);
      return {dom_neg && cod_pos, dom_pos && cod_neg};
    }
    case RelType::Kind::All:
      return {forall_flags(r.body(), fuel).first, false};
    case RelType::Kind::Conv:
      return forall_flags(r.body(), fuel);
    case RelType::Kind::Comp:
      return {false, false};
    case RelType::Kind::Promote: {
      bool id = is_identity(r.term(), fuel);
      return {id, id};
    }
  }
  return {false, false};
}

ForallClass forall_class(const RelType& r, std::size_t fuel) {
  auto [pos, neg] = forall_flags(r, fuel);
  if (pos && neg) return ForallClass::Both;
  if (pos) return ForallClass::PosOnly;
  if (neg) return ForallClass::NegOnly;
  return ForallClass::Neither;
}

std::optional<std::pair<Term, RelType>> match_dconj(const RelType& r) {
  if (r.kind() != RelType::Kind::Comp) return std::nullopt;
  auto closing = [](const RelType& c, const Term& t) {
    return c.kind() == RelType::Kind::Conv && c.body().kind() == RelType::Kind::Promote &&
           alpha_eq(c.body().term(), t);
  };
  const RelType& l = r.left();
  const RelType& rr = r.right();
  if (l.kind() == RelType::Kind::Promote && rr.kind() == RelType::Kind::Comp &&
      closing(rr.right(), l.term()))
    return std::make_pair(l.term(), rr.left());
  if (l.kind() == RelType::Kind::Comp && l.left().kind() == RelType::Kind::Promote &&
      closing(rr, l.left().term()))
    return std::make_pair(l.left().term(), l.right());
  return std::nullopt;
}

bool is_symmetric(const RelType& r, std::size_t fuel) {
  switch (r.kind()) {
    case RelType::Kind::Var:
    case RelType::Kind::Bound:
      return true;
    case RelType::Kind::Arrow:
      return is_symmetric(r.left(), fuel) && is_symmetric(r.right(), fuel);
    case RelType::Kind::All:
    case RelType::Kind::Conv:
      return is_symmetric(r.body(), fuel);
    case RelType::Kind::Comp:
      if (auto m = match_dconj(r)) return is_symmetric(m->second, fuel);
      return false;
    case RelType::Kind::Promote:
      return is_identity(r.term(), fuel);
  }
  return false;
}

bool is_simple_transitive(const RelType& r, std::size_t fuel) {
  if (auto m = match_dconj(r)) return is_simple_transitive(m->second, fuel);
  if (forall_flags(r, fuel).first) return true;
  if (r.kind() != RelType::Kind::Arrow) return false;
  auto [dom_pos, dom_neg] = forall_flags(r.left(), fuel);
  return (dom_pos || dom_neg) && is_simple_transitive(r.right(), fuel);
}

}  // namespace reltt
