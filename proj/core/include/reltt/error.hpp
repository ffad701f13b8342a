#pragma once

#include <stdexcept>
#include <string>

namespace reltt {

// Failure outside the kernel (System F validation, bridge, prelude
// generators). `kind` is a short hyphenated tag such as "rule-mismatch".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace reltt
