#ifndef MDEG_TOOLS_JSON_IO_HPP
#define MDEG_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "mdeg/automorphism.hpp"
#include "mdeg/bracket.hpp"
#include "mdeg/classify.hpp"
#include "mdeg/exclusion.hpp"

namespace mdeg::io {

using json = nlohmann::ordered_json;

/// {"triple":[...],"status":"In|NotIn|Unknown","why":{"rule":...,...}}
json verdict_json(const Verdict& verdict);

/// {"n":N,"components":[...],"inverse":[...]|null} in the polynomial grammar.
json polymap_json(const PolyMap& map);
PolyMap polymap_from_json(const json& doc);

json bracket_json(const BracketValue& value, int vars);

json exclusion_summary_json(const ExclusionSummary& summary);

json type3_json(const std::array<i64, 3>& triple,
                const std::optional<TypeIIIWitness>& witness);

json degree_json(Degree d);  // number, or null for -infinity

}  // namespace mdeg::io

#endif  // MDEG_TOOLS_JSON_IO_HPP
