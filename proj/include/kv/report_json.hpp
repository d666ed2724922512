#pragma once

#include <json.hpp>

#include "kv/families.hpp"
#include "kv/kvtheorem.hpp"

namespace kv {

// All machine-readable output uses nlohmann::ordered_json so that a
// given report always serializes to the same bytes.
using Json = nlohmann::ordered_json;

Json hilbert_to_json(const HilbertData& h);
HilbertData hilbert_from_json(const Json& j);

// schema kv-report/1: schema, field_char, input, degrees, deg_Z,
// hilbert {K, V, I_mod_I2}, verdicts {k_eq_v, lci, consistent},
// witnesses.  The submodule caches (S, K, V generators) are not part of
// the JSON surface.
Json report_to_json(const KVReport& r);
// Rebuilds the JSON-visible fields (submodule caches stay empty);
// report_to_json ∘ report_from_json is the identity on documents.
KVReport report_from_json(const Json& j);

Json arrangement_to_json(const ArrangementReport& r);
Json five_points_to_json(const FivePointsReport& r);
Json sym2_to_json(const Sym2Report& r);

}  // namespace kv
