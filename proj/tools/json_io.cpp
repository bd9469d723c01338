#include "json_io.hpp"

#include <stdexcept>

namespace mdeg::io {

json degree_json(Degree d) {
  if (!d.is_finite()) return nullptr;
  return d.value();
}

namespace {

json representation_json(const Representation& rep) {
  return json{{"i", rep.i}, {"j", rep.j}, {"target", rep.target}, {"gens", {rep.m, rep.M}}};
}

}  // namespace

json verdict_json(const Verdict& verdict) {
  json why;
  why["rule"] = rule_name(verdict.rule);
  if (verdict.representation) why["representation"] = representation_json(*verdict.representation);
  if (verdict.exceptional_ij) {
    why["i"] = verdict.exceptional_ij->first;
    why["j"] = verdict.exceptional_ij->second;
  }
  why["note"] = verdict.note;
  return json{{"triple", verdict.triple}, {"status", status_name(verdict.status)}, {"why", why}};
}

json polymap_json(const PolyMap& map) {
  json doc;
  doc["n"] = map.n;
  json comps = json::array();
  for (const auto& c : map.components) comps.push_back(c.str());
  doc["components"] = std::move(comps);
  if (map.inverse) {
    json inv = json::array();
    for (const auto& c : *map.inverse) inv.push_back(c.str());
    doc["inverse"] = std::move(inv);
  } else {
    doc["inverse"] = nullptr;
  }
  return doc;
}

PolyMap polymap_from_json(const json& doc) {
  PolyMap map;
  map.n = doc.at("n").get<int>();
  if (map.n < 1) throw std::invalid_argument("polymap: n must be >= 1");
  for (const auto& entry : doc.at("components"))
    map.components.push_back(Polynomial::parse(entry.get<std::string>(), map.n));
  if (map.components.size() != static_cast<std::size_t>(map.n))
    throw std::invalid_argument("polymap: component count must equal n");
  if (doc.contains("inverse") && !doc.at("inverse").is_null()) {
    std::vector<Polynomial> inv;
    for (const auto& entry : doc.at("inverse"))
      inv.push_back(Polynomial::parse(entry.get<std::string>(), map.n));
    if (inv.size() != static_cast<std::size_t>(map.n))
      throw std::invalid_argument("polymap: inverse count must equal n");
    map.inverse = std::move(inv);
  }
  return map;
}

json bracket_json(const BracketValue& value, int vars) {
  json minors;
  for (const auto& [key, minor] : value.minors)
    minors[std::to_string(key.first) + "," + std::to_string(key.second)] = minor.str();
  return json{{"vars", vars}, {"degree", degree_json(value.degree)}, {"minors", minors}};
}

json exclusion_summary_json(const ExclusionSummary& summary) {
  json positions = json::array();
  for (int t = 1; t <= 3; ++t) {
    const ExclusionReport& rep = summary.positions[t - 1];
    json forms = json::array();
    for (const auto& form : rep.feasible) forms.push_back({form.q, form.r});
    positions.push_back(json{{"position", t},
                             {"p", rep.p},
                             {"applicable", rep.applicable},
                             {"feasible", std::move(forms)},
                             {"r_max", rep.r_max},
                             {"representable", rep.representable},
                             {"excluded", rep.excluded},
                             {"trace", rep.trace}});
  }
  return json{{"triple", summary.triple},
              {"positions", std::move(positions)},
              {"all_excluded", summary.all_excluded}};
}

json type3_json(const std::array<i64, 3>& triple,
                const std::optional<TypeIIIWitness>& witness) {
  json doc;
  doc["triple"] = triple;
  if (witness)
    doc["witness"] = json{{"system", witness->system}, {"n", witness->n}};
  else
    doc["witness"] = nullptr;
  return doc;
}

}  // namespace mdeg::io
