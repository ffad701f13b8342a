#include "reltt/lexer.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "reltt/names.hpp"

namespace reltt {

namespace {

constexpr std::array<std::string_view, 19> kKeywords = {
    "term", "type", "proof", "check", "normalize", "analyze", "dump", "all", "rec", "fun",
    "Fun",  "pi",   "rho",   "iota",  "conv_i",    "conv_e",  "via",  "Dparam", "Dind"};

// Longest first so that prefixes do not win.
constexpr std::array<std::pair<std::string_view, std::string_view>, 27> kSymbols = {{
    {"\xE2\x8B\x85\xE2\x8B\x85", ".."},  // ⋅⋅
    {"\xCE\xBB", "\\"},                  // λ
    {"\xE2\x86\x92", "->"},              // →
    {"\xE2\x88\x80", "all"},             // ∀
    {"\xC2\xB7", "*"},                   // ·
    {"\xE2\x88\xAA", "^"},               // ∪
    {"\xE2\x8A\x86", "<="},              // ⊆
    {"\xE2\x87\x92", "=>"},              // ⇒
    {"\xE2\x89\x85", "~~"},              // ≅
    {"\xCE\xB9", "iota"},                // ι
    {"\xCF\x81", "rho"},                 // ρ
    {"\xCF\x80", "pi"},                  // π
    {"\xE2\x97\x81", "<|"},              // ◁
    {"\xE2\x96\xB7", "|>"},              // ▷
    {":=", ":="}, {"->", "->"}, {"=>", "=>"}, {"<=", "<="}, {"~~", "~~"}, {"<|", "<|"},
    {"|>", "|>"}, {"..", ".."}, {"\\", "\\"}, {".", "."}, {"*", "*"}, {"^", "^"}, {"-", "-"},
}};

constexpr std::string_view kSingles = "()[]{},;:";

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\''; }

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

std::vector<Token> lex(std::string_view src, bool allow_reserved) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, line_start = 0;
  auto span_at = [&](std::size_t b, std::size_t e) {
    return Span{line, b - line_start + 1, b, e};
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (c == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    std::size_t b = i;
    if (ident_start(c)) {
      bool dotted_name = false;
      while (i < src.size()) {
        if (ident_char(static_cast<unsigned char>(src[i]))) {
          ++i;
        } else if (src.substr(i, kDotMark.size()) == kDotMark) {
          dotted_name = true;
          i += kDotMark.size();
        } else {
          break;
        }
      }
      std::string text(src.substr(b, i - b));
      if (dotted_name && !allow_reserved)
        out.push_back({Token::Kind::Bad, "reserved dotted name '" + text + "'", span_at(b, i)});
      else
        out.push_back({Token::Kind::Ident, std::move(text), span_at(b, i)});
      continue;
    }
    if (std::isdigit(c)) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::Number, std::string(src.substr(b, i - b)), span_at(b, i)});
      continue;
    }
    if (c == '#') {
      ++i;
      while (i < src.size() && ident_char(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::Pragma, std::string(src.substr(b + 1, i - b - 1)), span_at(b, i)});
      continue;
    }
    if (kSingles.find(static_cast<char>(c)) != std::string_view::npos) {
      // ':=' is the only two-character symbol starting with a single.
      if (src.substr(i, 2) == ":=") {
        i += 2;
        out.push_back({Token::Kind::Symbol, ":=", span_at(b, i)});
      } else {
        ++i;
        out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), span_at(b, i)});
      }
      continue;
    }
    bool matched = false;
    for (auto [spelling, ascii] : kSymbols) {
      if (src.substr(i, spelling.size()) == spelling) {
        i += spelling.size();
        Token::Kind kind = ident_start(static_cast<unsigned char>(ascii[0])) ? Token::Kind::Ident
                                                                            : Token::Kind::Symbol;
        out.push_back({kind, std::string(ascii), span_at(b, i)});
        matched = true;
        break;
      }
    }
    if (matched) continue;
    // Skip one whole UTF-8 sequence so the message names the character.
    ++i;
    while (i < src.size() && (static_cast<unsigned char>(src[i]) & 0xC0) == 0x80) ++i;
    out.push_back({Token::Kind::Bad, "unexpected character '" + std::string(src.substr(b, i - b)) + "'",
                   span_at(b, i)});
  }
  out.push_back({Token::Kind::End, "", span_at(i, i)});
  return out;
}

}  // namespace reltt
