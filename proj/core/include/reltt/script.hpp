#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "reltt/parser.hpp"
#include "reltt/reduction.hpp"

namespace reltt {

struct Diagnostic {
  std::string file;
  Span span;
  std::string kind;     // kernel error kind, "parse-error", ...
  std::string message;
  std::string context;  // rendered proof context, empty when none applies
  bool parse = false;   // parse and configuration failures exit with 2
};

// FILE:LINE:COL: error[kind]: message, then the context on its own line.
std::string render(const Diagnostic& d);

struct RunConfig {
  std::size_t fuel = kDefaultFuel;
  bool trace = false;
  bool analyze_only = false;  // report on types, skip proofs
};

struct RunOutput {
  std::ostream* out = nullptr;    // echoed judgments and command results
  std::ostream* trace = nullptr;  // RelPf trees when tracing
  std::vector<std::string> judgments;
  std::vector<std::string> erasures;
  std::vector<std::string> systemf;
};

struct FileResult {
  std::vector<Diagnostic> diagnostics;
  int status = 0;  // 0 ok, 1 check failure, 2 parse failure
};

// Parses and runs one script on top of `base`. Statements run in order and a
// failing statement does not stop later ones.
FileResult run_script(const std::string& file, std::string_view src, const Env& base,
                      const RunConfig& config, RunOutput& output);

// The generated standard library, parsed and checked from scratch.
// Throws std::runtime_error if any entry fails, which would be a bug.
Env prelude_env(std::size_t fuel = kDefaultFuel);

// Human-readable analysis of one type.
std::string analysis_report(const RelType& r, std::size_t fuel);

}  // namespace reltt
