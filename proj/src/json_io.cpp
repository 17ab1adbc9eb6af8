#include "bct/json_io.hpp"

namespace bct {

using nlohmann::json;

json table_to_json(const BinaryTable& t) {
  json entries = json::object();
  for (SubsetMask I = 0; I < t.size(); ++I)
    entries[subset_str(I)] = rational_str(t[I]);
  return json{{"n", t.n()}, {"coords", coords_name(t.coords())}, {"entries", entries}};
}

BinaryTable table_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("table: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw SchemaError("table: missing integer field \"n\"");
  int n = j["n"].get<int>();
  if (n < 1 || n > 6) throw UnsupportedError("table: n must be between 1 and 6");
  if (!j.contains("coords") || !j["coords"].is_string())
    throw SchemaError("table: missing string field \"coords\"");
  std::string cs = j["coords"].get<std::string>();
  Coords coords;
  if (cs == "prob") coords = Coords::prob;
  else if (cs == "moment") coords = Coords::moment;
  else if (cs == "cumulant") coords = Coords::cumulant;
  else throw SchemaError("table: coords must be prob|moment|cumulant");
  if (!j.contains("entries") || !j["entries"].is_object())
    throw SchemaError("table: missing object field \"entries\"");
  const auto& entries = j["entries"];
  std::vector<Rational> vals(std::size_t(1) << n);
  std::vector<bool> seen(vals.size(), false);
  for (const auto& [key, value] : entries.items()) {
    auto mask = subset_from_str(key, n);
    if (!mask) throw SchemaError("table: malformed subset key \"" + key + "\"");
    if (seen[*mask]) throw SchemaError("table: duplicate subset key \"" + key + "\"");
    if (!value.is_string()) throw SchemaError("table: entry values must be strings");
    try {
      vals[*mask] = parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError("table: " + std::string(e.what()));
    }
    seen[*mask] = true;
  }
  for (SubsetMask I = 0; I < vals.size(); ++I)
    if (!seen[I]) throw SchemaError("table: missing entry for subset \"" + subset_str(I) + "\"");
  try {
    return BinaryTable(n, coords, std::move(vals));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json census_to_json(const Census& c) {
  const char* filter = c.filter == CensusFilter::none ? "none"
                       : c.filter == CensusFilter::nondegenerate ? "nondeg"
                                                                 : "a1a2";
  json orbits = json::array();
  for (const auto& o : c.orbits) {
    json rep = json::array();
    for (SubsetMask J : o.representative) rep.push_back(subset_str(J));
    json entry{{"m", o.m}, {"representative", rep}, {"orbit_size", o.orbit_size}};
    if (o.codimension) entry["codimension"] = *o.codimension;
    orbits.push_back(std::move(entry));
  }
  json per_m = json::object();
  for (const auto& [m, cnt] : c.per_m) per_m[std::to_string(m)] = cnt;
  return json{{"n", c.n},
              {"filter", filter},
              {"total_orbits", c.total_orbits},
              {"total_collections", c.total_collections},
              {"per_m", per_m},
              {"orbits", orbits}};
}

json optimize_report_json(const OptimizeResult& r) {
  json argmax = json::object();
  for (SubsetMask I = 0; I < r.argmax.size(); ++I)
    argmax[subset_str(I)] = r.argmax[I];
  json cert = json::object();
  for (SubsetMask I = 0; I < r.certified_argmax.size(); ++I)
    cert[subset_str(I)] = rational_str(r.certified_argmax[I]);
  return json{{"n", r.n},
              {"best_value", r.best_value},
              {"argmax", argmax},
              {"starts", r.starts},
              {"seed", r.seed},
              {"tolerance", r.tolerance},
              {"certified_value", rational_str(r.certified_value)},
              {"certified_argmax", cert}};
}

json membership_report_json(const MembershipResult& r, int n) {
  json probs = json::object();
  for (SubsetMask I = 0; I < r.probs.size(); ++I)
    probs[subset_str(I)] = rational_str(r.probs[I]);
  json out{{"n", n}, {"member", r.member}, {"probabilities", probs}};
  if (!r.member) {
    out["witness"] = subset_str(r.witness);
    out["violated_probability"] = rational_str(r.violated_probability);
  }
  return out;
}

json parametrization_json(const ModelParametrization& par) {
  json coords = json::object();
  for (const auto& [I, p] : par.coords) coords[subset_str(I)] = p.str();
  return json{{"n", par.n},
              {"params", par.params->names()},
              {"free_params", par.free_params},
              {"coords", coords}};
}

}  // namespace bct
