// reltt: batch checker for relational typing proof scripts.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "reltt/print.hpp"
#include "reltt/script.hpp"
#include "reltt/stdlib.hpp"

namespace {

using namespace reltt;

bool write_lines(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  for (const auto& l : lines) out << l << '\n';
  return static_cast<bool>(out);
}

struct Options {
  std::vector<std::string> files;
  std::size_t fuel = kDefaultFuel;
  bool no_prelude = false;
  bool trace = false;
  std::string dump_judgments, dump_erasure, dump_systemf;
  std::string term;
};

Env base_env(const Options& o) { return o.no_prelude ? Env{} : prelude_env(); }

int run_files(const Options& o, bool analyze_only) {
  Env base = base_env(o);
  RunConfig config;
  config.fuel = o.fuel;
  config.trace = o.trace;
  config.analyze_only = analyze_only;
  RunOutput output;
  output.out = &std::cout;
  output.trace = o.trace ? &std::cerr : nullptr;
  int status = 0;
  for (const auto& file : o.files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      std::cerr << file << ":0:0: error[io-error]: cannot read file\n";
      status = 2;
      continue;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    FileResult r = run_script(file, buf.str(), base, config, output);
    for (const auto& d : r.diagnostics) std::cerr << render(d) << '\n';
    status = std::max(status, r.status);
  }
  bool ok = true;
  if (!o.dump_judgments.empty()) ok &= write_lines(o.dump_judgments, output.judgments);
  if (!o.dump_erasure.empty()) ok &= write_lines(o.dump_erasure, output.erasures);
  if (!o.dump_systemf.empty()) ok &= write_lines(o.dump_systemf, output.systemf);
  if (!ok) {
    std::cerr << "reltt: error[io-error]: cannot write a dump file\n";
    status = 2;
  }
  return status;
}

int run_normalize(const Options& o) {
  Env env = base_env(o);
  Term t = [&] {
    try {
      return parse_term(o.term, env);
    } catch (const ParseError& e) {
      std::cerr << "<term>:" << e.span().line << ":" << e.span().col
                << ": error[parse-error]: " << e.what() << '\n';
      std::exit(2);
    }
  }();
  NormalizeResult r = normalize(t, o.fuel);
  if (!r.normal()) {
    std::cerr << "<term>:1:1: error[fuel-exhausted]: no normal form within " << o.fuel
              << " steps; reached " << show(r.term) << '\n';
    return 1;
  }
  std::cout << show(r.term) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker for relational type theory proof scripts"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Check proof scripts");
  check->add_option("files", o.files, "Script files")->required();
  check->add_option("--fuel", o.fuel, "Rewrite steps allowed per conversion");
  check->add_flag("--no-prelude", o.no_prelude, "Do not load the standard library");
  check->add_option("--dump-judgments", o.dump_judgments, "Write judgment records (JSON lines)");
  check->add_option("--dump-erasure", o.dump_erasure, "Write erasure records (JSON lines)");
  check->add_option("--dump-systemf", o.dump_systemf, "Write System F projection records");
  check->add_flag("--trace", o.trace, "Print each derivation tree to stderr");

  auto* analyze = app.add_subcommand("analyze", "Report polarity and quantifier classes");
  analyze->add_option("file", o.files, "Script file")->required()->expected(1);
  analyze->add_option("--fuel", o.fuel, "Rewrite steps allowed per conversion");
  analyze->add_flag("--no-prelude", o.no_prelude, "Do not load the standard library");

  auto* norm = app.add_subcommand("normalize", "Print the beta-eta normal form of a term");
  norm->add_option("term", o.term, "Term in surface syntax")->required();
  norm->add_option("--fuel", o.fuel, "Rewrite steps allowed");
  norm->add_flag("--no-prelude", o.no_prelude, "Do not load the standard library");

  auto* prelude = app.add_subcommand("prelude", "Print the generated standard library");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_files(o, false);
    if (*analyze) return run_files(o, true);
    if (*norm) return run_normalize(o);
    if (*prelude) {
      std::cout << render_prelude(build_stdlib());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "reltt: internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
