#include "reltt/systemf.hpp"

#include "reltt/print.hpp"

namespace reltt {

FType FType::from(const RelType& r) {
  if (!is_system_f(r)) throw Error("malformed-parameter", "not a System F type: " + show(r));
  return FType(r);
}

bool alpha_eq(const FType& a, const FType& b) { return alpha_eq(a.rel(), b.rel()); }

std::string show(const FType& t) { return show(t.rel()); }

void FContext::push(std::string x, FType t) {
  if (lookup(x)) throw Error("shadowing-violation", "variable " + x + " is already declared");
  entries_.push_back({std::move(x), std::move(t)});
}

FContext FContext::extended(std::string x, FType t) const {
  FContext out = *this;
  out.push(std::move(x), std::move(t));
  return out;
}

FContext FContext::inserted(std::size_t at, std::string x, FType t) const {
  if (lookup(x)) throw Error("shadowing-violation", "variable " + x + " is already declared");
  FContext out = *this;
  at = std::min(at, out.entries_.size());
  out.entries_.insert(out.entries_.begin() + static_cast<std::ptrdiff_t>(at),
                      FBinding{std::move(x), std::move(t)});
  return out;
}

const FType* FContext::lookup(std::string_view x) const {
  for (const auto& b : entries_)
    if (b.var == x) return &b.type;
  return nullptr;
}

NameSet FContext::free_type_vars() const {
  NameSet out;
  for (const auto& b : entries_) out.merge(reltt::free_type_vars(b.type.rel()));
  return out;
}

NameSet FContext::vars() const {
  NameSet out;
  for (const auto& b : entries_) out.insert(b.var);
  return out;
}

std::size_t FDerivation::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::string_view to_string(FDerivation::Rule r) {
  switch (r) {
    case FDerivation::Rule::Var:
      return "var";
    case FDerivation::Rule::Abs:
      return "abs";
    case FDerivation::Rule::App:
      return "app";
    case FDerivation::Rule::Gen:
      return "gen";
    case FDerivation::Rule::Inst:
      return "inst";
  }
  return "?";
}

FDerivation fvar(std::string x) { return {FDerivation::Rule::Var, std::move(x), std::nullopt, {}}; }

FDerivation fabs(std::string x, FType domain, FDerivation body) {
  return {FDerivation::Rule::Abs, std::move(x), std::move(domain), {std::move(body)}};
}

FDerivation fapp(FDerivation fn, FDerivation arg) {
  return {FDerivation::Rule::App, "", std::nullopt, {std::move(fn), std::move(arg)}};
}

FDerivation fgen(std::string tvar, FDerivation body) {
  return {FDerivation::Rule::Gen, std::move(tvar), std::nullopt, {std::move(body)}};
}

FDerivation finst(FDerivation d, FType with) {
  return {FDerivation::Rule::Inst, "", std::move(with), {std::move(d)}};
}

namespace {

[[noreturn]] void mismatch(const std::string& msg) { throw Error("rule-mismatch", msg); }

void arity(const FDerivation& d, std::size_t n, bool wants_type) {
  if (d.premises.size() != n)
    mismatch(std::string(to_string(d.rule)) + " node expects " + std::to_string(n) +
             " premises, has " + std::to_string(d.premises.size()));
  if (d.type.has_value() != wants_type)
    mismatch(std::string(to_string(d.rule)) + " node has a misplaced type payload");
}

class Validator {
 public:
  explicit Validator(const FContext& root) {
    for (const auto& b : root.entries()) scope_.push_back(b);
  }

  FJudgment run(const FDerivation& d) {
    switch (d.rule) {
      case FDerivation::Rule::Var: {
        arity(d, 0, false);
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
          if (it->var == d.name) return {Term::var(d.name), it->type};
        throw Error("unbound-variable", "unbound variable " + d.name);
      }
      case FDerivation::Rule::Abs: {
        arity(d, 1, true);
        for (const auto& b : scope_)
          if (b.var == d.name)
            throw Error("freshness-violation", "abstraction rebinds " + d.name);
        scope_.push_back({d.name, *d.type});
        FJudgment body = run(d.premises[0]);
        scope_.pop_back();
        return {Term::lam(d.name, body.subject), FType::arrow(*d.type, body.type)};
      }
      case FDerivation::Rule::App: {
        arity(d, 2, false);
        FJudgment f = run(d.premises[0]);
        FJudgment a = run(d.premises[1]);
        if (f.type.kind() != RelType::Kind::Arrow)
          mismatch("application of " + show(f.subject) + " at non-arrow type " + show(f.type));
        if (!alpha_eq(f.type.left(), a.type))
          mismatch("argument type " + show(a.type) + " does not match " + show(f.type.left()));
        return {Term::app(f.subject, a.subject), f.type.right()};
      }
      case FDerivation::Rule::Gen: {
        arity(d, 1, false);
        for (const auto& b : scope_)
          if (occurs_free_tvar(d.name, b.type.rel()))
            throw Error("freshness-violation",
                        "type variable " + d.name + " is free in the type of " + b.var);
        FJudgment body = run(d.premises[0]);
        return {body.subject, FType::all(d.name, body.type)};
      }
      case FDerivation::Rule::Inst: {
        arity(d, 1, true);
        FJudgment body = run(d.premises[0]);
        if (body.type.kind() != RelType::Kind::All)
          mismatch("instantiation of non-universal type " + show(body.type));
        return {body.subject, body.type.instantiate(*d.type)};
      }
    }
    mismatch("unknown rule");
  }

 private:
  std::vector<FBinding> scope_;
};

}  // namespace

FJudgment validate_f(const FContext& delta, const FDerivation& d) { return Validator(delta).run(d); }

void collect_f_names(const FDerivation& d, NameSet& terms, NameSet& types) {
  switch (d.rule) {
    case FDerivation::Rule::Var:
    case FDerivation::Rule::Abs:
      terms.insert(d.name);
      break;
    case FDerivation::Rule::Gen:
      types.insert(d.name);
      break;
    default:
      break;
  }
  if (d.type) collect_type_names(d.type->rel(), types);
  for (const auto& p : d.premises) collect_f_names(p, terms, types);
}

FDerivation rename_f_var(const FDerivation& d, const std::string& from, const std::string& to) {
  if (d.rule == FDerivation::Rule::Var) return d.name == from ? fvar(to) : d;
  if (d.rule == FDerivation::Rule::Abs && d.name == from) return d;
  FDerivation out = d;
  for (auto& p : out.premises) p = rename_f_var(p, from, to);
  return out;
}

FDerivation rename_f_tvar(const FDerivation& d, const std::string& from, const std::string& to) {
  if (d.rule == FDerivation::Rule::Gen && d.name == from) return d;
  FDerivation out = d;
  if (out.type) out.type = FType::from(subst_tvar(RelType::var(to), from, out.type->rel()));
  for (auto& p : out.premises) p = rename_f_tvar(p, from, to);
  return out;
}

namespace {

struct Weakener {
  std::string x;
  NameSet type_fv;  // free type variables of the inserted type
  NameSet used;

  FDerivation run(const FDerivation& d) {
    if (d.rule == FDerivation::Rule::Abs && d.name == x) {
      std::string y = fresh(x, used);
      used.insert(y);
      FDerivation body = rename_f_var(d.premises[0], x, y);
      return fabs(y, *d.type, run(body));
    }
    if (d.rule == FDerivation::Rule::Gen && type_fv.count(d.name)) {
      std::string y = fresh(d.name, used);
      used.insert(y);
      FDerivation body = rename_f_tvar(d.premises[0], d.name, y);
      return fgen(y, run(body));
    }
    FDerivation out = d;
    for (auto& p : out.premises) p = run(p);
    return out;
  }
};

}  // namespace

FDerivation weaken_f(const FContext& delta, const FDerivation& d, const std::string& x,
                     const FType& t, std::size_t at) {
  FContext wider = delta.inserted(at, x, t);
  Weakener w{x, free_type_vars(t.rel()), {}};
  collect_f_names(d, w.used, w.used);
  for (const auto& b : wider.entries()) {
    w.used.insert(b.var);
    collect_type_names(b.type.rel(), w.used);
  }
  FDerivation out = w.run(d);
  validate_f(wider, out);
  return out;
}

FDerivation weaken_front(const FContext& delta, const FDerivation& d, const FContext& extra) {
  FDerivation out = d;
  FContext cur = delta;
  std::size_t at = 0;
  for (const auto& b : extra.entries()) {
    out = weaken_f(cur, out, b.var, b.type, at);
    cur = cur.inserted(at, b.var, b.type);
    ++at;
  }
  return out;
}

}  // namespace reltt
