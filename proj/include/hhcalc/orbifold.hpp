#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhcalc/bigint.hpp"
#include "hhcalc/graded.hpp"

namespace hhcalc {

/* One group element's fixed-locus data: table maps (p, j) to
 * dim H^j(X^g, wedge^p T_{X^g} (x) det N_{X^g/X}) and codim is c_g. The
 * invariant interval bounds the part surviving G-invariants, on the assembled
 * degrees p + j + c_g. Tables are caller-supplied; this module implements only
 * the aggregation. */
struct FixedLocusDatum {
    std::string label;
    int codim = 0;
    std::map<std::pair<int, int>, BigInt> table;
    GradedInterval invariant;
};

// Validating factory. Omitting `invariant` defaults it to
// [0, element_contribution] (nothing known beyond the trivial bounds).
// Throws MalformedDatumError on negative codim, negative table indices or
// entries, or an invariant exceeding the assembled total.
FixedLocusDatum make_fixed_locus_datum(std::string label, int codim,
                                       std::map<std::pair<int, int>, BigInt> table,
                                       std::optional<GradedInterval> invariant = std::nullopt);

// Before invariants: table(p, j) lands at degree p + j + codim.
GradedDims element_contribution(const FixedLocusDatum& d);

// Pointwise interval sum of per-element invariant intervals; exact when every
// input interval is collapsed. Validates each datum (MalformedDatumError).
GradedInterval orbifold_hh(const std::vector<FixedLocusDatum>& data);

} // namespace hhcalc
