#pragma once

#include <string>
#include <variant>

#include "usdkit/instances.hpp"

namespace usdkit {

// Instance JSON schema. Fields not applicable to a kind are absent:
//   filtering: {"p1": .., "beta": [..], "overlaps": [..]}
//   pure pair: adds "phases"
//   rank-N:    {"p1": .., "alpha": [..], "beta": [..], "diag_overlaps": [..]}
// p2 is implied as 1 - p1 and never written.

std::string to_json(const FilteringInstance& inst);
std::string to_json(const PurePairInstance& inst);
std::string to_json(const RankNPairInstance& inst);

using AnyInstance = std::variant<FilteringInstance, PurePairInstance, RankNPairInstance>;

// Kind is inferred from the keys present. Throws SpecError on malformed
// JSON or an unrecognizable key set. Parsed instances are not auto-validated.
AnyInstance parse_instance(const std::string& text);

FilteringInstance parse_filtering(const std::string& text);
PurePairInstance parse_pure_pair(const std::string& text);
RankNPairInstance parse_rank_n(const std::string& text);

}  // namespace usdkit
