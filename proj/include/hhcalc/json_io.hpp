#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hhcalc/equivariant.hpp"
#include "hhcalc/graded.hpp"
#include "hhcalc/hkr.hpp"
#include "hhcalc/hodge.hpp"
#include "hhcalc/orbifold.hpp"
#include "hhcalc/sod.hpp"

namespace hhcalc {

using nlohmann::json;

/* JSON schemas (SchemaError with a "$.field.path" locator on any violation):
 *
 *   GradedDims     {"dims": {"-2": 21, "0": 146}, "kind": "homology"?}
 *   GradedInterval {"lo": <GradedDims>, "hi": <GradedDims>}
 *   HodgeDiamond   {"dim": 2, "h": [[1,0,0],[0,20,0],[0,0,1]]}
 *   PolyvectorTable{"dim": 2, "table": {"1,1": 20}}
 *   VarietySpec    {"weights": [1,1,1,1], "degree": 4}
 *   SodSpec        {"total": <GradedDims kind=homology>, "components":
 *                   [{"label": "c", "hh": <GradedDims>}], "exceptional_count": 2}
 *   FixedLocusDatum{"label": "g", "codim": 1, "table": {"0,0": 1},
 *                   "invariant": <GradedInterval>?}
 *   SerreDescriptor{"shift_n": 3, "twist_order_q": 2}
 *
 * Dimensions are nonnegative and may exceed 64 bits: emitted as JSON numbers
 * when they fit, decimal strings otherwise; both forms parse. */

// -- dimensions ------------------------------------------------------------
json dim_to_json(const BigInt& v);
BigInt dim_from_json(const json& j, const std::string& path);

// -- graded dimension vectors ----------------------------------------------
json dims_to_json(const GradedDims& v, const std::optional<std::string>& kind = std::nullopt);
GradedDims dims_from_json(const json& j, const std::string& path);
// Variant that also surfaces the "kind" tag ("homology" / "cohomology").
std::pair<GradedDims, std::optional<std::string>> dims_from_json_tagged(const json& j,
                                                                        const std::string& path);

json interval_to_json(const GradedInterval& v);
GradedInterval interval_from_json(const json& j, const std::string& path);

// -- hodge -------------------------------------------------------------------
json diamond_to_json(const HodgeDiamond& d);
HodgeDiamond diamond_from_json(const json& j, const std::string& path);

json variety_spec_to_json(const VarietySpec& s);
VarietySpec variety_spec_from_json(const json& j, const std::string& path);

// -- hkr ---------------------------------------------------------------------
json polyvectors_to_json(const PolyvectorTable& t);
PolyvectorTable polyvectors_from_json(const json& j, const std::string& path);

// -- sod ---------------------------------------------------------------------
// Homology-only: the total must carry kind "homology" and no part may carry
// kind "cohomology" (HH^* is not additive over semiorthogonal decompositions).
json sod_spec_to_json(const SodSpec& s);
SodSpec sod_spec_from_json(const json& j, const std::string& path);

// -- equivariant ---------------------------------------------------------------
json serre_to_json(const SerreDescriptor& s);
SerreDescriptor serre_from_json(const json& j, const std::string& path);

json z2_split_to_json(const Z2Split& s);

// -- orbifold ------------------------------------------------------------------
json fixed_locus_datum_to_json(const FixedLocusDatum& d);
FixedLocusDatum fixed_locus_datum_from_json(const json& j, const std::string& path);
// Accepts a bare array of datum objects or {"data": [...]}.
std::vector<FixedLocusDatum> fixed_locus_data_from_json(const json& j, const std::string& path);

// Parses text as JSON; SchemaError (path "$") on malformed documents.
json parse_document(const std::string& text);

} // namespace hhcalc
