#include "reltt/script.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "reltt/analysis.hpp"
#include "reltt/bridge.hpp"
#include "reltt/dump.hpp"
#include "reltt/error.hpp"
#include "reltt/kernel.hpp"
#include "reltt/print.hpp"
#include "reltt/relpf.hpp"
#include "reltt/stdlib.hpp"

namespace reltt {

std::string render(const Diagnostic& d) {
  std::string out = d.file + ":" + std::to_string(d.span.line) + ":" + std::to_string(d.span.col) +
                    ": error[" + d.kind + "]: " + d.message;
  if (!d.context.empty()) out += "\n  in context " + d.context;
  return out;
}

std::string analysis_report(const RelType& r, std::size_t fuel) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::string out = "type " + show(r) + "\n";
  out += std::string("  symmetric: ") + yes(is_symmetric(r, fuel)) + "\n";
  auto [pos, neg] = forall_flags(r, fuel);
  out += std::string("  forall+: ") + yes(pos) + "\n";
  out += std::string("  forall-: ") + yes(neg) + "\n";
  out += std::string("  simple transitive: ") + yes(is_simple_transitive(r, fuel)) + "\n";
  for (const auto& x : free_type_vars(r)) {
    bool plus = polarity_holds(x, Polarity::Plus, r);
    bool minus = polarity_holds(x, Polarity::Minus, r);
    const char* p = plus && minus ? "absent" : plus ? "positive" : minus ? "negative" : "mixed";
    out += "  " + x + ": " + p + "\n";
  }
  return out;
}

namespace {

class Runner {
 public:
  Runner(const std::string& file, std::string_view src, const RunConfig& config, RunOutput& output)
      : file_(file), src_(src), config_(config), fuel_(config.fuel), output_(output) {}

  FileResult result;

  void run(const Statement& st) {
    try {
      dispatch(st);
    } catch (const KernelError& e) {
      report(e.span().known() ? e.span() : st.span, std::string(to_string(e.kind())), e.what(),
             st.context.empty() ? "" : show(st.context));
    } catch (const AnalysisError& e) {
      report(st.span, "analysis-undecided", e.what(), "");
    } catch (const Error& e) {
      report(st.span, e.kind(), e.what(), "");
    }
  }

  void report(const Span& span, std::string kind, std::string message, std::string context,
              bool parse = false) {
    result.diagnostics.push_back({file_, span, std::move(kind), std::move(message),
                                  std::move(context), parse});
    result.status = std::max(result.status, parse ? 2 : 1);
  }

 private:
  const std::string& file_;
  std::string_view src_;
  const RunConfig& config_;
  std::size_t fuel_;
  RunOutput& output_;

  void say(const std::string& text) {
    if (output_.out) *output_.out << text << "\n";
  }

  void dispatch(const Statement& st) {
    using K = Statement::Kind;
    switch (st.kind) {
      case K::Fuel:
        fuel_ = st.count;
        return;
      case K::TermDef:
        return;
      case K::TypeDef:
        if (config_.analyze_only) say(st.name + ": " + analysis_report(*st.type, fuel_));
        return;
      case K::Analyze:
        say(analysis_report(*st.type, fuel_));
        return;
      case K::Normalize: {
        if (config_.analyze_only) return;
        NormalizeResult n = normalize(*st.term, fuel_);
        if (!n.normal())
          throw Error("fuel-exhausted", "no normal form within " + std::to_string(fuel_) +
                                            " steps; reached " + show(n.term));
        say(show(n.term));
        return;
      }
      case K::ProofDef:
        if (!config_.analyze_only) proof_def(st);
        return;
      case K::Check:
      case K::Dump:
        if (!config_.analyze_only) command(st);
        return;
    }
  }

  void proof_def(const Statement& st) {
    Derivation d = derive(st.context, *st.proof, fuel_);
    if (!alpha_eq(d.judgment, *st.judgment))
      throw KernelError(ErrorKind::DeclarationMismatch, st.proof->span(), "declaration",
                        "proof establishes " + show(d.judgment) + " but " + st.name +
                            " declares " + show(*st.judgment));
    say("proof " + st.name + " : " + declared_text(st));
    if (output_.trace) *output_.trace << st.name << "\n" << render(to_relpf(d));
    output_.judgments.push_back(judgment_record(file_, st.name, d));
    output_.erasures.push_back(erasure_record(file_, st.name, d));
    FContext delta = project_ctx(st.context);
    FDerivation fd = project_derivation(d);
    FJudgment fj = validate_f(delta, fd);
    output_.systemf.push_back(systemf_record(file_, st.name, delta, fd, fj));
  }

  // The judgment as the author wrote it; definitions stay folded.
  std::string declared_text(const Statement& st) const {
    const Span& s = st.judgment_span;
    std::string text(src_.substr(s.begin, s.end - s.begin));
    std::string out;
    bool space = false;
    for (char c : text) {
      if (c == '\n' || c == '\t' || c == ' ') {
        space = true;
        continue;
      }
      if (space && !out.empty()) out += ' ';
      space = false;
      out += c;
    }
    return out;
  }

  void command(const Statement& st) {
    // Always from a cold start: a command never trusts an earlier result.
    auto it = env_proofs->find(st.name);
    const ProofDef& def = it->second;
    Derivation d = derive(def.context, def.proof, fuel_);
    if (!alpha_eq(d.judgment, def.judgment))
      throw KernelError(ErrorKind::DeclarationMismatch, st.span, "declaration",
                        "proof establishes " + show(d.judgment) + " but " + st.name +
                            " declares " + show(def.judgment));
    if (st.kind == Statement::Kind::Check)
      say("check " + st.name + " : ok");
    else {
      std::string tree = render(to_relpf(d));
      if (!tree.empty() && tree.back() == '\n') tree.pop_back();
      say(tree);
    }
  }

 public:
  const std::map<std::string, ProofDef, std::less<>>* env_proofs = nullptr;
};

}  // namespace

FileResult run_script(const std::string& file, std::string_view src, const Env& base,
                      const RunConfig& config, RunOutput& output) {
  Env env = base;
  Script script = parse_script(src, env);
  Runner runner(file, src, config, output);
  runner.env_proofs = &env.proofs;
  for (const ParseError& e : script.errors) runner.report(e.span(), "parse-error", e.what(), "", true);
  for (const Statement& st : script.statements) runner.run(st);
  std::stable_sort(runner.result.diagnostics.begin(), runner.result.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.span.begin < b.span.begin; });
  return std::move(runner.result);
}

Env prelude_env(std::size_t fuel) {
  Stdlib lib = build_stdlib(fuel);
  std::string text = render_prelude(lib);
  Env env;
  Script script = parse_script(text, env, true);
  if (!script.errors.empty())
    throw std::runtime_error(std::string("prelude does not parse: ") + script.errors.front().what());
  for (const Statement& st : script.statements)
    if (st.kind == Statement::Kind::ProofDef) check_declared(st.context, *st.proof, *st.judgment, fuel);
  return env;
}

}  // namespace reltt
