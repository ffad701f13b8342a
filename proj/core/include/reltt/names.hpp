#pragma once

#include <set>
#include <string>
#include <string_view>

namespace reltt {

using NameSet = std::set<std::string, std::less<>>;

// Returns `base` when it is not in `avoid`, otherwise the first `base<N>`
// (N = 1, 2, ...) that is. Deterministic in (base, avoid).
std::string fresh(std::string_view base, const NameSet& avoid);

// Dotted names form the right-hand copy of the System F embedding. They are
// spelled with a trailing U+0307 COMBINING DOT ABOVE, which the surface lexer
// refuses in user scripts.
inline constexpr std::string_view kDotMark = "\xCC\x87";

std::string dotted(std::string_view name);
bool is_dotted(std::string_view name);

}  // namespace reltt
