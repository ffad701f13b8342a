#include "reltt/dump.hpp"

#include <json.hpp>

#include "reltt/bridge.hpp"
#include "reltt/print.hpp"
#include "reltt/relpf.hpp"

namespace reltt {

namespace {

using Json = nlohmann::ordered_json;

Json judgment_fields(const Judgment& j) {
  return Json{{"left", show(j.left)}, {"type", show(j.type)}, {"right", show(j.right)}};
}

Json relpf_json(const RelPfNode& n) {
  Json premises = Json::array();
  for (const auto& p : n.premises) premises.push_back(relpf_json(p));
  return Json{{"rule", n.rule}, {"judgment", show(n.judgment)}, {"premises", std::move(premises)}};
}

Json fderivation_json(const FDerivation& d) {
  Json out{{"rule", std::string(to_string(d.rule))}};
  if (!d.name.empty()) out["name"] = d.name;
  if (d.type) out["type"] = show(*d.type);
  Json premises = Json::array();
  for (const auto& p : d.premises) premises.push_back(fderivation_json(p));
  out["premises"] = std::move(premises);
  return out;
}

std::string line(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::strict);
}

}  // namespace

std::string judgment_record(const std::string& file, const std::string& name, const Derivation& d) {
  Json ctx = Json::array();
  for (const auto& e : d.context.entries()) {
    Json entry{{"var", e.proof_var}};
    entry.update(judgment_fields(e.judgment));
    ctx.push_back(std::move(entry));
  }
  Json out{{"file", file}, {"proof", name}, {"context", std::move(ctx)}};
  out.update(judgment_fields(d.judgment));
  out["derivation"] = relpf_json(to_relpf(d));
  return line(out);
}

std::string erasure_record(const std::string& file, const std::string& name, const Derivation& d) {
  Json out{{"file", file},
           {"proof", name},
           {"erasure", show(erase_proof(d.proof))},
           {"projection", show(project_type(d.judgment.type))}};
  return line(out);
}

std::string systemf_record(const std::string& file, const std::string& name,
                           const FContext& delta, const FDerivation& fd, const FJudgment& j) {
  Json ctx = Json::array();
  for (const auto& b : delta.entries()) ctx.push_back(Json{{"var", b.var}, {"type", show(b.type)}});
  Json out{{"file", file},
           {"proof", name},
           {"context", std::move(ctx)},
           {"subject", show(j.subject)},
           {"type", show(j.type)},
           {"derivation", fderivation_json(fd)}};
  return line(out);
}

}  // namespace reltt
