#pragma once

#include "bct/classify.hpp"
#include "bct/cumulant_space.hpp"
#include "bct/models.hpp"
#include "bct/transforms.hpp"

#include <json.hpp>

#include <stdexcept>

namespace bct {

// Malformed or constraint-violating input (CLI exit code 2).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sizes outside the supported range (CLI exit code 3).
struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Table schema:
//   {"n": 2, "coords": "prob", "entries": {"": "1/4", "1": "1/4", ...}}
// Subset keys are ascending element digits (elements 1..6), "" for the empty
// set; all 2^n keys must be present. Values are reduced "p/q" strings ("p"
// when q = 1); plain decimals are accepted on input and converted exactly.
nlohmann::json table_to_json(const BinaryTable& t);
BinaryTable table_from_json(const nlohmann::json& j);

nlohmann::json census_to_json(const Census& c);
nlohmann::json optimize_report_json(const OptimizeResult& r);
nlohmann::json membership_report_json(const MembershipResult& r, int n);
nlohmann::json parametrization_json(const ModelParametrization& par);

}  // namespace bct
