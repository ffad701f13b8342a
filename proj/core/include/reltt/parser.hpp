#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reltt/context.hpp"
#include "reltt/proof.hpp"

namespace reltt {

class ParseError : public std::runtime_error {
 public:
  ParseError(Span span, const std::string& message) : std::runtime_error(message), span_(span) {}
  const Span& span() const { return span_; }

 private:
  Span span_;
};

struct ProofDef {
  Context context;
  Judgment judgment;
  Proof proof;
};

// Definitions visible to the parser. Names are resolved at parse time: a
// defined term or type name is replaced by its (closed) definition, and a
// reference to a proof declared with an empty context is replaced by that
// proof with its binders refreshed. Local binders always shadow definitions.
struct Env {
  std::map<std::string, Term, std::less<>> terms;
  std::map<std::string, RelType, std::less<>> types;
  std::map<std::string, ProofDef, std::less<>> proofs;
};

struct Statement {
  enum class Kind { Fuel, TermDef, TypeDef, ProofDef, Check, Normalize, Analyze, Dump };
  Kind kind;
  Span span;
  std::string name;
  std::size_t count = 0;
  std::optional<Term> term;
  std::optional<RelType> type;
  Context context;
  std::optional<Judgment> judgment;
  Span judgment_span;  // source extent of the declared judgment
  std::optional<Proof> proof;
};

struct Script {
  std::vector<Statement> statements;
  std::vector<ParseError> errors;
};

// Parses a whole script. Dotted names are admitted when allow_reserved is
// set or when the script opens with the `#reserved` pragma, which generated
// files carry. Definitions are added to `env` as they are parsed.
// A statement with a syntax error is reported and skipped up to the next
// ';', and parsing continues.
Script parse_script(std::string_view src, Env& env, bool allow_reserved = false);

// Single phrases; the whole input must be consumed. allow_reserved admits
// dotted names, as found in generated text.
Term parse_term(std::string_view src, const Env& env = {}, bool allow_reserved = false);
RelType parse_type(std::string_view src, const Env& env = {}, bool allow_reserved = false);
Proof parse_proof(std::string_view src, const Env& env = {}, const Context& g = {},
                  bool allow_reserved = false);
Judgment parse_judgment(std::string_view src, const Env& env = {}, bool allow_reserved = false);

}  // namespace reltt
