#include "reltt/relpf.hpp"

#include "reltt/print.hpp"

namespace reltt {

std::size_t RelPfNode::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

RelPfNode to_relpf(const Derivation& d) {
  RelPfNode out{std::string(rule_name(d.proof.kind())), {}, d.judgment, {}};
  for (const auto& e : d.context.entries()) out.context.push_back(e.judgment);
  for (const auto& p : d.premises) out.premises.push_back(to_relpf(p));
  return out;
}

RelPfNode to_relpf(const Context& g, const Proof& p, std::size_t fuel) {
  return to_relpf(derive(g, p, fuel));
}

std::vector<std::string> main_spine(const RelPfNode& n) {
  std::vector<std::string> out;
  for (const RelPfNode* cur = &n;; cur = &cur->premises.front()) {
    out.push_back(cur->rule);
    if (cur->premises.empty()) break;
  }
  return out;
}

namespace {

void render_into(const RelPfNode& n, std::size_t depth, std::string& out) {
  out.append(depth * 2, ' ');
  out += show(n.judgment);
  out += "   (" + n.rule + ")\n";
  for (const auto& p : n.premises) render_into(p, depth + 1, out);
}

}  // namespace

std::string render(const RelPfNode& n) {
  std::string out;
  render_into(n, 0, out);
  return out;
}

}  // namespace reltt
