#include "usdkit/json_io.hpp"

#include <json.hpp>

namespace usdkit {

namespace {

using nlohmann::json;

json priors_to_json(const Priors& p) { return json{{"p1", p.p1}}; }

Priors priors_from_json(const json& j) {
  double p1 = j.at("p1").get<double>();
  return Priors{p1, 1.0 - p1};
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SpecError("malformed instance JSON");
  if (!j.is_object()) throw SpecError("instance JSON must be an object");
  return j;
}

std::vector<double> vec(const json& j, const char* key) {
  const auto& node = j.at(key);
  if (!node.is_array()) throw SpecError(std::string(key) + " must be an array");
  return node.get<std::vector<double>>();
}

}  // namespace

std::string to_json(const FilteringInstance& inst) {
  json j = priors_to_json(inst.priors);
  j["beta"] = inst.beta;
  j["overlaps"] = inst.overlaps;
  return j.dump();
}

std::string to_json(const PurePairInstance& inst) {
  json j = priors_to_json(inst.priors);
  j["beta"] = inst.beta;
  j["overlaps"] = inst.overlaps;
  j["phases"] = inst.phases;
  return j.dump();
}

std::string to_json(const RankNPairInstance& inst) {
  json j = priors_to_json(inst.priors);
  j["alpha"] = inst.alpha;
  j["beta"] = inst.beta;
  j["diag_overlaps"] = inst.diag_overlaps;
  return j.dump();
}

FilteringInstance parse_filtering(const std::string& text) {
  json j = parse_text(text);
  try {
    return FilteringInstance{priors_from_json(j), vec(j, "beta"), vec(j, "overlaps")};
  } catch (const json::exception& e) {
    throw SpecError(std::string("filtering instance: ") + e.what());
  }
}

PurePairInstance parse_pure_pair(const std::string& text) {
  json j = parse_text(text);
  try {
    return PurePairInstance{priors_from_json(j), vec(j, "beta"), vec(j, "overlaps"),
                            vec(j, "phases")};
  } catch (const json::exception& e) {
    throw SpecError(std::string("pure pair instance: ") + e.what());
  }
}

RankNPairInstance parse_rank_n(const std::string& text) {
  json j = parse_text(text);
  try {
    return RankNPairInstance{priors_from_json(j), vec(j, "alpha"), vec(j, "beta"),
                             vec(j, "diag_overlaps")};
  } catch (const json::exception& e) {
    throw SpecError(std::string("rank-n instance: ") + e.what());
  }
}

AnyInstance parse_instance(const std::string& text) {
  json j = parse_text(text);
  if (j.contains("diag_overlaps") || j.contains("alpha"))
    return parse_rank_n(text);
  if (j.contains("phases")) return parse_pure_pair(text);
  if (j.contains("overlaps")) return parse_filtering(text);
  throw SpecError("instance JSON matches no known kind");
}

}  // namespace usdkit
