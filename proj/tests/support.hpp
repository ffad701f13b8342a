// Shared fixtures for the test binaries: random generators, the proof
// corpus, and an independent normalizer used as an oracle.
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reltt/builders.hpp"
#include "reltt/parser.hpp"
#include "reltt/prelude.hpp"
#include "reltt/script.hpp"
#include "reltt/stdlib.hpp"

namespace reltt::testing {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::filesystem::path source_dir() { return RELTT_SOURCE_DIR; }

// ---- random generation

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 0; }

  // Named term of at most `size` nodes over the given free names; binders
  // reuse names from the same pool so shadowing gets exercised.
  Term term(int size, const std::vector<std::string>& pool = {"x", "y", "z", "f"}) {
    const std::string& name = pool[below(static_cast<int>(pool.size()))];
    if (size <= 1) return Term::var(name);
    if (size == 2 || coin()) return Term::lam(name, term(size - 1, pool));
    int left = 1 + below(size - 2);
    return Term::app(term(left, pool), term(size - 1 - left, pool));
  }

  // Relational type of at most `size` nodes over type variables X, Y, Z.
  RelType type(int size) {
    static const std::vector<std::string> vars = {"X", "Y", "Z"};
    const std::string& v = vars[below(3)];
    if (size <= 1) return below(6) == 0 ? RelType::promote(term(2)) : RelType::var(v);
    switch (below(4)) {
      case 0: return RelType::all(v, type(size - 1));
      case 1: return RelType::conv(type(size - 1));
      default: {
        if (size < 3) return RelType::conv(type(size - 1));
        int left = 1 + below(size - 2);
        RelType a = type(left), b = type(size - 1 - left);
        return coin() ? RelType::arrow(a, b) : RelType::comp(a, b);
      }
    }
  }

  // Type from the System F fragment: variables, arrows, quantifiers.
  RelType ftype(int size) {
    static const std::vector<std::string> vars = {"X", "Y", "Z"};
    const std::string& v = vars[below(3)];
    if (size <= 1) return RelType::var(v);
    if (size == 2 || below(3) == 0) return RelType::all(v, ftype(size - 1));
    int left = 1 + below(size - 2);
    return RelType::arrow(ftype(left), ftype(size - 1 - left));
  }

 private:
  std::mt19937 rng_;
};

// ---- corpus

struct CorpusProof {
  std::string name;
  Context context;
  Judgment judgment;
  Proof proof;
};

inline const Env& prelude() {
  static const Env env = prelude_env();
  return env;
}

// Every proof the repository ships: the standard library, the corpus
// scripts, and builder outputs.
inline const std::vector<CorpusProof>& corpus() {
  static const std::vector<CorpusProof> all = [] {
    std::vector<CorpusProof> out;
    Env env;
    Script lib = parse_script(render_prelude(build_stdlib()), env, true);
    for (const auto& st : lib.statements)
      if (st.kind == Statement::Kind::ProofDef)
        out.push_back({st.name, st.context, *st.judgment, *st.proof});
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(source_dir() / "corpus"))
      if (e.path().extension() == ".rtt") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      Env local = prelude();
      Script s = parse_script(read_file(f), local);
      for (const auto& st : s.statements)
        if (st.kind == Statement::Kind::ProofDef)
          out.push_back({f.stem().string() + "/" + st.name, st.context, *st.judgment, *st.proof});
    }
    RelType r = RelType::var("R"), s = RelType::var("S");
    out.push_back({"builder/fig3", fig3_context(r), Judgment{Term::var("x"), r, Term::var("y'")},
                   fig3(r)});
    Context h;
    h.push("q", {Term::var("a"), r, Term::var("b")});
    auto ident = [](const Proof& u, const Term&, const Term&) { return u; };
    out.push_back({"builder/subset", h, {Term::var("t1"), subset(r, r), Term::var("t2")},
                   subset_intro(h, Term::var("t1"), Term::var("t2"), r, r, ident)});
    auto keep = [](const Proof&, const Term&, const Term&) { return Proof::var("q"); };
    out.push_back({"builder/impprod", h, {Term::var("a"), impprod(s, r), Term::var("b")},
                   impprod_intro(h, Term::var("a"), Term::var("b"), s, r, keep)});
    return out;
  }();
  return all;
}

// ---- independent normalizer (normalization by evaluation, then eta)

namespace nbe {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;
using Env = std::vector<ValuePtr>;  // de Bruijn environment, innermost last

struct Value {
  enum class Kind { Closure, Neutral } kind;
  Term body{Term::var("")};  // closure body, index 0 bound
  Env env;
  // neutral: head is a free name or a de Bruijn level, applied to args
  std::string head;
  long level = -1;
  std::vector<ValuePtr> args;
};

struct Budget {
  long steps;
  bool spend() { return --steps >= 0; }
};

inline ValuePtr eval(const Term& t, const Env& env, Budget& b);

inline ValuePtr apply(const ValuePtr& f, const ValuePtr& a, Budget& b) {
  if (!b.spend()) throw std::runtime_error("budget");
  if (f->kind == Value::Kind::Closure) {
    Env e = f->env;
    e.push_back(a);
    return eval(f->body, e, b);
  }
  auto n = std::make_shared<Value>(*f);
  n->args.push_back(a);
  return n;
}

inline ValuePtr eval(const Term& t, const Env& env, Budget& b) {
  switch (t.kind()) {
    case Term::Kind::Free: {
      auto v = std::make_shared<Value>();
      v->kind = Value::Kind::Neutral;
      v->head = t.name();
      return v;
    }
    case Term::Kind::Bound:
      return env.at(env.size() - 1 - t.index());
    case Term::Kind::Lam: {
      auto v = std::make_shared<Value>();
      v->kind = Value::Kind::Closure;
      v->body = t.body();
      v->env = env;
      return v;
    }
    case Term::Kind::App:
      return apply(eval(t.fn(), env, b), eval(t.arg(), env, b), b);
  }
  throw std::logic_error("term kind");
}

inline Term quote(const ValuePtr& v, long depth, Budget& b) {
  if (v->kind == Value::Kind::Closure) {
    auto var = std::make_shared<Value>();
    var->kind = Value::Kind::Neutral;
    var->level = depth;
    return Term::lam_nameless("x", quote(apply(v, var, b), depth + 1, b));
  }
  Term head = v->level >= 0 ? Term::bound(static_cast<std::size_t>(depth - 1 - v->level))
                            : Term::var(v->head);
  for (const auto& a : v->args) head = Term::app(head, quote(a, depth, b));
  return head;
}

// Removes eta redexes bottom-up; on a beta-normal term the result is the
// beta-eta normal form.
inline Term eta(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Free:
    case Term::Kind::Bound:
      return t;
    case Term::Kind::App:
      return Term::app(eta(t.fn()), eta(t.arg()));
    case Term::Kind::Lam: {
      Term body = eta(t.body());
      if (body.is_app() && body.arg().is_bound() && body.arg().index() == 0 &&
          !references_index(body.fn(), 0))
        return shift(body.fn(), -1);
      return Term::lam_nameless(t.name(), body);
    }
  }
  return t;
}

// Beta-eta normal form, or nullopt if the budget runs out.
inline std::optional<Term> normal_form(const Term& t, long budget = 200000) {
  Budget b{budget};
  try {
    return eta(quote(eval(t, {}, b), 0, b));
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

}  // namespace nbe

// Church-style numeral in normal form, written out by hand:
//   n0 = \a. a (\x. \y. x (\z. z))
//   nk = \a. a (\x. \y. y (body of n(k-1)))
inline std::string numeral_normal_form(unsigned k) {
  std::string body = "a (\\x. \\y. x (\\z. z))";
  for (unsigned i = 0; i < k; ++i) body = "a (\\x. \\y. y (" + body + "))";
  return "\\a. " + body;
}

}  // namespace reltt::testing
