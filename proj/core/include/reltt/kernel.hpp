#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "reltt/context.hpp"
#include "reltt/proof.hpp"
#include "reltt/reduction.hpp"

namespace reltt {

enum class ErrorKind {
  UnboundProofVariable,
  NotAnArrow,
  NotAUniversal,
  NotAPromotion,
  NotAComposition,
  NotAConverse,
  TypeMismatch,
  ConversionFailed,
  ConversionUndecided,
  FreshnessViolation,
  RhoPremiseMismatch,
  PairMidMismatch,
  DeclarationMismatch,
};

std::string_view to_string(ErrorKind k);

class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorKind kind, Span span, std::string rule, const std::string& message)
      : std::runtime_error(message), kind_(kind), span_(span), rule_(std::move(rule)) {}

  ErrorKind kind() const { return kind_; }
  // Span of the offending proof node, when the proof came from source.
  const Span& span() const { return span_; }
  // Name of the rule being applied when the error arose.
  const std::string& rule() const { return rule_; }

 private:
  ErrorKind kind_;
  Span span_;
  std::string rule_;
};

// One rule application with the context it was applied in.
struct Derivation {
  Proof proof;
  Context context;
  Judgment judgment;
  std::vector<Derivation> premises;
};

// Synthesizes the judgment proved by p, bottom-up, one rule per proof
// constructor. Each conversion gets its own budget of `fuel` steps.
Derivation derive(const Context& g, const Proof& p, std::size_t fuel = kDefaultFuel);
Judgment check(const Context& g, const Proof& p, std::size_t fuel = kDefaultFuel);
// Like check, then requires the result to be alpha-equal to `declared`.
Judgment check_declared(const Context& g, const Proof& p, const Judgment& declared,
                        std::size_t fuel = kDefaultFuel);

// Rule name for display, e.g. "->-elim".
std::string_view rule_name(Proof::Kind k);

}  // namespace reltt
