#include "reltt/names.hpp"

namespace reltt {

std::string fresh(std::string_view base, const NameSet& avoid) {
  if (!avoid.contains(base)) return std::string(base);
  for (unsigned long i = 1;; ++i) {
    std::string candidate = std::string(base) + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

std::string dotted(std::string_view name) {
  return std::string(name) + std::string(kDotMark);
}

bool is_dotted(std::string_view name) {
  return name.find(kDotMark) != std::string_view::npos;
}

}  // namespace reltt
