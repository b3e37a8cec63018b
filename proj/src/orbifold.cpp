#include "hhcalc/orbifold.hpp"

#include <string>

#include "hhcalc/errors.hpp"

namespace hhcalc {

namespace {

void validate_shape(const std::string& label, int codim,
                    const std::map<std::pair<int, int>, BigInt>& table) {
    if (codim < 0)
        throw MalformedDatumError("datum \"" + label + "\": codim must be nonnegative");
    for (const auto& [pj, v] : table) {
        if (pj.first < 0 || pj.second < 0)
            throw MalformedDatumError("datum \"" + label + "\": table indices must be " +
                                      "nonnegative, got (" + std::to_string(pj.first) + "," +
                                      std::to_string(pj.second) + ")");
        if (v < 0)
            throw MalformedDatumError("datum \"" + label + "\": table entries must be nonnegative");
    }
}

void validate_invariant(const FixedLocusDatum& d) {
    const GradedDims total = element_contribution(d);
    for (const auto& [deg, dim] : d.invariant.hi().entries())
        if (total.at(deg) < dim)
            throw MalformedDatumError("datum \"" + d.label +
                                      "\": invariant exceeds the assembled total at degree " +
                                      std::to_string(deg));
}

} // namespace

FixedLocusDatum make_fixed_locus_datum(std::string label, int codim,
                                       std::map<std::pair<int, int>, BigInt> table,
                                       std::optional<GradedInterval> invariant) {
    validate_shape(label, codim, table);
    FixedLocusDatum d;
    d.label = std::move(label);
    d.codim = codim;
    for (auto& [pj, v] : table)
        if (v != 0) d.table.emplace(pj, std::move(v));
    if (invariant)
        d.invariant = std::move(*invariant);
    else
        d.invariant = GradedInterval(GradedDims{}, element_contribution(d));
    validate_invariant(d);
    return d;
}

GradedDims element_contribution(const FixedLocusDatum& d) {
    GradedDims r;
    for (const auto& [pj, v] : d.table) r.add(pj.first + pj.second + d.codim, v);
    return r;
}

GradedInterval orbifold_hh(const std::vector<FixedLocusDatum>& data) {
    GradedInterval acc;
    for (const auto& d : data) {
        validate_shape(d.label, d.codim, d.table);
        validate_invariant(d);
        acc = interval_sum(acc, d.invariant);
    }
    return acc;
}

} // namespace hhcalc
