#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rooted/explorer.hpp"
#include "rooted/lq_verify.hpp"
#include "rooted/power_gens.hpp"
#include "rooted/rooted_order.hpp"

namespace rooted {

using Json = nlohmann::ordered_json;

Json to_json(const GeneratorList& list);  // ["x2*x4", ...]
Json to_json(const MonomialSet& set);
Json to_json(const std::vector<ChooserStep>& script);
// {verdict, failure_index?, steps: [{r, colon_vars, raw_colon_count}]}
Json to_json(const LqReport& report);
Json to_json(const StructureReport& report);
Json to_json(const ColonPropositionReport& report);
Json to_json(const RegularityCheck& check);
Json to_json(const ExploreReport& report);

// One JSON-lines record for a power enumeration.  elapsed_ms is only written
// when given, so default output stays byte-identical across runs.
Json gens_record(const PowerGens& gens, int n, bool is_path,
                 std::optional<double> elapsed_ms = std::nullopt);

// Accepts a bare array of steps, or {"strategy": "canonical" | "largest" |
// "script", "script": [...]}.  A step is a vertex label or an array
// [pick, block order...].
ChordalChooser chooser_from_json(std::string_view text);

}  // namespace rooted
