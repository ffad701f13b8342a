#pragma once

#include <string>
#include <vector>

#include "reltt/kernel.hpp"

namespace reltt {

// A RelPf derivation: the kernel derivation with proof terms erased and
// contexts reduced to their judgments.
struct RelPfNode {
  std::string rule;
  std::vector<Judgment> context;
  Judgment judgment;
  std::vector<RelPfNode> premises;

  std::size_t size() const;
};

RelPfNode to_relpf(const Derivation& d);
RelPfNode to_relpf(const Context& g, const Proof& p, std::size_t fuel = kDefaultFuel);

// Rules met walking from the root through first premises.
std::vector<std::string> main_spine(const RelPfNode& n);

// Indented text, conclusion first, one node per line.
std::string render(const RelPfNode& n);

}  // namespace reltt
