#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reltt/proof.hpp"

namespace reltt {

struct Token {
  enum class Kind { Ident, Number, Symbol, Pragma, Bad, End };
  Kind kind;
  std::string text;  // symbols are normalized to their ASCII spelling
  Span span;
};

// Splits source into tokens. `--` starts a line comment. Unicode aliases
// (λ → ∀ · ∪ ⊆ ⇒ ≅ ⋅⋅ ι ρ π ◁ ▷) lex as their ASCII counterparts. Names
// carrying the dot mark are reserved for generated text and lex as Bad
// unless allow_reserved is set; any other unexpected input also yields a Bad
// token whose text is the message.
std::vector<Token> lex(std::string_view src, bool allow_reserved = false);

bool is_keyword(std::string_view word);

}  // namespace reltt
