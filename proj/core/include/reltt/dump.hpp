#pragma once

#include <string>

#include "reltt/kernel.hpp"
#include "reltt/systemf.hpp"

namespace reltt {

// One-line JSON records with a fixed key order. Terms and types are rendered
// with show(), so every string field parses back to an alpha-equal value.

// Context, judgment and the RelPf tree of a checked proof.
std::string judgment_record(const std::string& file, const std::string& name, const Derivation& d);

// |p| and |R| for a checked proof.
std::string erasure_record(const std::string& file, const std::string& name, const Derivation& d);

// The projected System F derivation with its validated conclusion.
std::string systemf_record(const std::string& file, const std::string& name,
                           const FContext& delta, const FDerivation& fd, const FJudgment& j);

}  // namespace reltt
