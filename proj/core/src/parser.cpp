#include "reltt/parser.hpp"

#include <algorithm>
#include <charconv>

#include "reltt/lexer.hpp"
#include "reltt/prelude.hpp"

namespace reltt {

namespace {

// Pushes a name onto a scope for the lifetime of the guard, including
// during exception unwinding when a parse attempt is abandoned.
class ScopeGuard {
 public:
  ScopeGuard(std::vector<std::string>& scope, std::string name) : scope_(scope) {
    scope_.push_back(std::move(name));
  }
  ~ScopeGuard() { scope_.pop_back(); }
  ScopeGuard(const ScopeGuard&) = delete;
  ScopeGuard& operator=(const ScopeGuard&) = delete;

 private:
  std::vector<std::string>& scope_;
};

bool in_scope(const std::vector<std::string>& scope, std::string_view name) {
  return std::find(scope.begin(), scope.end(), name) != scope.end();
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End:
      return "end of input";
    case Token::Kind::Pragma:
      return "'#" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

class Parser {
 public:
  Parser(const std::vector<Token>& toks, const Env& env) : toks_(toks), env_(env) {}

  std::size_t pos = 0;
  std::vector<std::string> term_scope;
  std::vector<std::string> type_scope;
  std::vector<std::string> proof_scope;
  // Names a refreshed proof must avoid.
  NameSet avoid;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos + ahead, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_sym(std::string_view s, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == Token::Kind::Symbol && t.text == s;
  }
  bool is_kw(std::string_view s) const {
    const Token& t = peek();
    return t.kind == Token::Kind::Ident && t.text == s;
  }
  bool is_name() const {
    const Token& t = peek();
    return t.kind == Token::Kind::Ident && !is_keyword(t.text);
  }

  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    if (t.kind == Token::Kind::Bad) throw ParseError(t.span, t.text);
    throw ParseError(t.span, "expected " + what + ", found " + describe(t));
  }

  const Token& advance() { return toks_[pos++]; }

  void expect_sym(std::string_view s) {
    if (!is_sym(s)) fail("'" + std::string(s) + "'");
    advance();
  }
  void expect_kw(std::string_view s) {
    if (!is_kw(s)) fail("'" + std::string(s) + "'");
    advance();
  }
  std::string name(const char* what) {
    if (!is_name()) fail(what);
    return advance().text;
  }

  Span span_from(std::size_t start) const {
    const Span& a = toks_[start].span;
    const Span& b = toks_[pos > start ? pos - 1 : start].span;
    return Span{a.line, a.col, a.begin, b.end};
  }

  // ---- terms

  bool starts_term() const { return is_name() || is_sym("(") || is_sym("\\"); }

  Term term() {
    if (is_sym("\\")) {
      advance();
      std::vector<std::string> binders;
      do binders.push_back(name("a binder name"));
      while (is_name());
      expect_sym(".");
      std::vector<std::unique_ptr<ScopeGuard>> guards;
      for (const auto& b : binders) guards.push_back(std::make_unique<ScopeGuard>(term_scope, b));
      Term body = term();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = Term::lam(*it, body);
      return body;
    }
    Term head = term_atom();
    while (is_name() || is_sym("(") || is_sym("\\")) {
      if (is_sym("\\")) return Term::app(head, term());
      head = Term::app(head, term_atom());
    }
    return head;
  }

  Term term_atom() {
    if (is_sym("(")) {
      advance();
      Term t = term();
      expect_sym(")");
      return t;
    }
    std::string x = name("a term");
    if (!in_scope(term_scope, x)) {
      auto it = env_.terms.find(x);
      if (it != env_.terms.end()) return it->second;
    }
    return Term::var(x);
  }

  // ---- types

  RelType type() {
    RelType left = arrow_type();
    if (is_sym("~~")) {
      advance();
      return releq(left, arrow_type());
    }
    if (is_sym("<=")) {
      advance();
      return subset(left, arrow_type());
    }
    return left;
  }

  RelType arrow_type() {
    if (is_kw("all") || is_kw("rec")) {
      bool is_rec = advance().text == "rec";
      std::vector<std::string> binders;
      do binders.push_back(name("a type variable"));
      while (!is_rec && is_name());
      expect_sym(".");
      std::vector<std::unique_ptr<ScopeGuard>> guards;
      for (const auto& b : binders) guards.push_back(std::make_unique<ScopeGuard>(type_scope, b));
      RelType body = type();
      if (is_rec) return rec(binders[0], body);
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = RelType::all(*it, body);
      return body;
    }
    RelType left = dconj_type();
    if (is_sym("->")) {
      advance();
      return RelType::arrow(left, arrow_type());
    }
    if (is_sym("=>")) {
      advance();
      return impprod(left, arrow_type());
    }
    return left;
  }

  RelType dconj_type() {
    if (starts_term()) {
      std::size_t save = pos;
      try {
        Term t = term();
        if (is_sym("..")) {
          advance();
          return dconj(t, dconj_type());
        }
      } catch (const ParseError&) {
      }
      pos = save;
    }
    return comp_type();
  }

  RelType comp_type() {
    RelType left = prefix_type();
    if (is_sym("*")) {
      advance();
      return RelType::comp(left, comp_type());
    }
    return left;
  }

  RelType prefix_type() {
    if (is_sym("[")) {
      advance();
      Term t = term();
      expect_sym("]");
      return int_type_l(t, prefix_type());
    }
    return postfix_type();
  }

  RelType postfix_type() {
    RelType r = type_atom();
    for (;;) {
      if (is_sym("^")) {
        advance();
        r = RelType::conv(r);
      } else if (is_sym("[")) {
        advance();
        Term t = term();
        expect_sym("]");
        r = int_type_r(r, t);
      } else {
        return r;
      }
    }
  }

  RelType type_atom() {
    if (is_sym("(")) {
      advance();
      RelType r = type();
      expect_sym(")");
      return r;
    }
    if (is_sym("{")) {
      advance();
      Term t = term();
      expect_sym("}");
      return RelType::promote(t);
    }
    if (is_kw("Dparam") || is_kw("Dind")) {
      bool param = advance().text == "Dparam";
      expect_sym("(");
      std::string x = name("a type variable");
      expect_sym(",");
      RelType body = [&] {
        ScopeGuard g(type_scope, x);
        return type();
      }();
      expect_sym(")");
      return param ? dparam(x, body) : dind(x, body);
    }
    std::string x = name("a type");
    if (!in_scope(type_scope, x)) {
      auto it = env_.types.find(x);
      if (it != env_.types.end()) return it->second;
    }
    return RelType::var(x);
  }

  Judgment judgment() {
    Term left = term();
    expect_sym("[");
    RelType r = type();
    expect_sym("]");
    Term right = term();
    return {left, r, right};
  }

  // ---- proofs

  Proof proof() {
    std::size_t start = pos;
    if (is_kw("fun")) {
      advance();
      expect_sym("(");
      std::string u = name("a proof variable");
      expect_sym(":");
      std::string x = name("a subject variable");
      expect_sym("[");
      RelType r = type();
      expect_sym("]");
      std::string x2 = name("a subject variable");
      expect_sym(")");
      expect_sym("=>");
      ScopeGuard gu(proof_scope, u), gx(term_scope, x), gx2(term_scope, x2);
      Proof body = proof();
      return Proof::lam(u, x, r, x2, body, span_from(start));
    }
    if (is_kw("Fun")) {
      advance();
      std::string x = name("a type variable");
      expect_sym("=>");
      ScopeGuard g(type_scope, x);
      Proof body = proof();
      return Proof::ty_lam(x, body, span_from(start));
    }
    if (is_kw("pi")) {
      advance();
      Proof scrutinee = proof_app();
      expect_sym("-");
      std::string x = name("a subject variable");
      std::string u = name("a proof variable");
      std::string v = name("a proof variable");
      expect_sym(".");
      ScopeGuard gx(term_scope, x), gu(proof_scope, u), gv(proof_scope, v);
      Proof body = proof();
      return Proof::pi(scrutinee, x, u, v, body, span_from(start));
    }
    if (is_kw("rho")) {
      advance();
      expect_sym("{");
      std::string x = name("a variable");
      expect_sym(".");
      Term t1 = [&] {
        ScopeGuard g(term_scope, x);
        return term();
      }();
      expect_sym(",");
      Term t2 = [&] {
        ScopeGuard g(term_scope, x);
        return term();
      }();
      expect_sym("}");
      Proof eq = proof_app();
      expect_sym("-");
      Proof body = proof();
      return Proof::rho(x, t1, t2, eq, body, span_from(start));
    }
    if (starts_term()) {
      std::size_t save = pos;
      std::optional<Term> left;
      try {
        left = term();
      } catch (const ParseError&) {
      }
      if (left && is_sym("<|")) {
        advance();
        Proof inner = proof();
        expect_sym("|>");
        Term right = term();
        return Proof::conv(*left, inner, right, span_from(start));
      }
      pos = save;
    }
    return proof_app();
  }

  bool starts_patom() const {
    return is_name() || is_sym("(") || is_kw("conv_i") || is_kw("conv_e") || is_kw("iota");
  }

  Proof proof_app() {
    std::size_t start = pos;
    Proof head = proof_atom();
    for (;;) {
      if (is_sym("{")) {
        advance();
        RelType r = type();
        expect_sym("}");
        head = Proof::ty_app(head, r, span_from(start));
      } else if (starts_patom()) {
        Proof arg = proof_atom();
        head = Proof::app(head, arg, span_from(start));
      } else {
        return head;
      }
    }
  }

  Proof proof_atom() {
    std::size_t start = pos;
    if (is_kw("conv_i") || is_kw("conv_e")) {
      bool intro = advance().text == "conv_i";
      Proof sub = proof_atom();
      return intro ? Proof::conv_i(sub, span_from(start)) : Proof::conv_e(sub, span_from(start));
    }
    if (is_kw("iota")) {
      advance();
      expect_sym("{");
      Term t = term();
      expect_sym(",");
      Term t2 = term();
      expect_sym("}");
      return Proof::iota(t, t2, span_from(start));
    }
    if (is_sym("(")) {
      advance();
      Proof first = proof();
      if (is_sym(",")) {
        advance();
        Proof second = proof();
        expect_kw("via");
        Term mid = term();
        expect_sym(")");
        return Proof::pair(first, second, mid, span_from(start));
      }
      expect_sym(")");
      return first;
    }
    std::string u = name("a proof");
    Span s = span_from(start);
    if (!in_scope(proof_scope, u)) {
      auto it = env_.proofs.find(u);
      if (it != env_.proofs.end() && it->second.context.empty()) return inline_proof(it->second.proof);
    }
    return Proof::var(u, s);
  }

  Proof inline_proof(const Proof& p) const {
    NameSet pv, tv, ty;
    collect_proof_names(p, pv, tv, ty);
    bool clash = false;
    for (const NameSet* set : {&pv, &tv, &ty})
      for (const auto& n : *set)
        if (avoid.count(n)) clash = true;
    return clash ? refresh_binders(p, avoid, "r") : p;
  }

  // ---- statements

  Context context() {
    Context g;
    expect_sym("(");
    if (!is_sym(")")) {
      for (;;) {
        std::size_t at = pos;
        std::string u = name("a proof variable");
        expect_sym(":");
        Judgment j = judgment();
        if (g.declares(u)) {
          pos = at;
          fail("a proof variable not already in the context");
        }
        g.push(u, j);
        if (!is_sym(",")) break;
        advance();
      }
    }
    expect_sym(")");
    return g;
  }

  void collect_statement_names() {
    avoid.clear();
    for (std::size_t i = pos; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      if (t.kind == Token::Kind::Symbol && t.text == ";") break;
      if (t.kind == Token::Kind::Ident) avoid.insert(t.text);
    }
  }

  void end_statement() {
    if (!is_sym(";")) fail("';'");
    advance();
  }

  Statement statement(Env& env) {
    collect_statement_names();
    Statement st;
    std::size_t start = pos;
    const Token& t = peek();
    if (t.kind == Token::Kind::Pragma) {
      if (t.text != "fuel") fail("a known pragma");
      advance();
      if (peek().kind != Token::Kind::Number) fail("a fuel amount");
      const std::string& digits = advance().text;
      st.kind = Statement::Kind::Fuel;
      auto res = std::from_chars(digits.data(), digits.data() + digits.size(), st.count);
      if (res.ec != std::errc{}) {
        --pos;
        fail("a fuel amount that fits in 64 bits");
      }
      if (is_sym(";")) advance();
      st.span = span_from(start);
      return st;
    }
    if (is_kw("term")) {
      advance();
      st.kind = Statement::Kind::TermDef;
      st.name = defined_name(env.terms, "term");
      expect_sym(":=");
      st.term = term();
      if (!free_vars(*st.term).empty()) fail_at(start, "term definitions must be closed");
      end_statement();
      env.terms.emplace(st.name, *st.term);
    } else if (is_kw("type")) {
      advance();
      st.kind = Statement::Kind::TypeDef;
      st.name = defined_name(env.types, "type");
      expect_sym(":=");
      st.type = type();
      FreeVars fv = free_vars(*st.type);
      if (!fv.terms.empty() || !fv.types.empty()) fail_at(start, "type definitions must be closed");
      end_statement();
      env.types.emplace(st.name, *st.type);
    } else if (is_kw("proof")) {
      advance();
      st.kind = Statement::Kind::ProofDef;
      st.name = defined_name(env.proofs, "proof");
      if (is_sym("(")) st.context = context();
      expect_sym(":");
      std::size_t jstart = pos;
      st.judgment = judgment();
      st.judgment_span = span_from(jstart);
      expect_sym(":=");
      for (const auto& e : st.context.entries()) proof_scope.push_back(e.proof_var);
      struct Pop {
        std::vector<std::string>& s;
        std::size_t n;
        ~Pop() { s.resize(n); }
      } pop{proof_scope, 0};
      st.proof = proof();
      end_statement();
      env.proofs.emplace(st.name, ProofDef{st.context, *st.judgment, *st.proof});
    } else if (is_kw("check") || is_kw("dump")) {
      st.kind = advance().text == "check" ? Statement::Kind::Check : Statement::Kind::Dump;
      if (!is_name() || !env.proofs.count(peek().text)) fail("the name of a declared proof");
      st.name = advance().text;
      end_statement();
    } else if (is_kw("normalize")) {
      advance();
      st.kind = Statement::Kind::Normalize;
      st.term = term();
      end_statement();
    } else if (is_kw("analyze")) {
      advance();
      st.kind = Statement::Kind::Analyze;
      st.type = type();
      end_statement();
    } else {
      fail("a statement");
    }
    st.span = span_from(start);
    return st;
  }

  template <typename Map>
  std::string defined_name(const Map& m, const char* what) {
    std::size_t at = pos;
    std::string n = name("a name");
    if (m.count(n)) {
      pos = at;
      throw ParseError(peek().span, std::string(what) + " '" + n + "' is already defined");
    }
    return n;
  }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    throw ParseError(toks_[at].span, message);
  }

  void recover() {
    while (!at_end() && !is_sym(";")) ++pos;
    if (is_sym(";")) ++pos;
  }

 private:
  const std::vector<Token>& toks_;
  const Env& env_;
};

template <typename F>
auto parse_whole(std::string_view src, const Env& env, bool allow_reserved, F&& f) {
  std::vector<Token> toks = lex(src, allow_reserved);
  Parser p(toks, env);
  for (const Token& t : toks)
    if (t.kind == Token::Kind::Ident) p.avoid.insert(t.text);
  auto result = f(p);
  if (!p.at_end()) p.fail("end of input");
  return result;
}

}  // namespace

Script parse_script(std::string_view src, Env& env, bool allow_reserved) {
  std::vector<Token> toks = lex(src, true);
  bool marked = toks.front().kind == Token::Kind::Pragma && toks.front().text == "reserved";
  if (!allow_reserved && !marked) toks = lex(src, false);
  Parser p(toks, env);
  if (marked) p.pos = 1;
  Script out;
  while (!p.at_end()) {
    std::size_t before = p.pos;
    try {
      out.statements.push_back(p.statement(env));
    } catch (const ParseError& e) {
      out.errors.push_back(e);
      p.term_scope.clear();
      p.type_scope.clear();
      p.proof_scope.clear();
      if (p.pos < before) p.pos = before;
      p.recover();
    }
  }
  return out;
}

Term parse_term(std::string_view src, const Env& env, bool allow_reserved) {
  return parse_whole(src, env, allow_reserved, [](Parser& p) { return p.term(); });
}

RelType parse_type(std::string_view src, const Env& env, bool allow_reserved) {
  return parse_whole(src, env, allow_reserved, [](Parser& p) { return p.type(); });
}

Judgment parse_judgment(std::string_view src, const Env& env, bool allow_reserved) {
  return parse_whole(src, env, allow_reserved, [](Parser& p) { return p.judgment(); });
}

Proof parse_proof(std::string_view src, const Env& env, const Context& g,
                  bool allow_reserved) {
  return parse_whole(src, env, allow_reserved, [&](Parser& p) {
    for (const auto& e : g.entries()) p.proof_scope.push_back(e.proof_var);
    FreeVars fv = g.free_vars();
    p.avoid.insert(fv.terms.begin(), fv.terms.end());
    p.avoid.insert(fv.types.begin(), fv.types.end());
    return p.proof();
  });
}

}  // namespace reltt
