#include "hhcalc/sod.hpp"

#include <set>

#include "hhcalc/errors.hpp"

namespace hhcalc {

GradedDims residual(const SodSpec& spec) {
    if (spec.exceptional_count < 0)
        throw MalformedSummandError("exceptional_count must be nonnegative");
    std::set<std::string> seen;
    for (const auto& c : spec.components)
        if (!seen.insert(c.label).second)
            throw MalformedSummandError("duplicate component label \"" + c.label + "\"");

    GradedDims rest = spec.total;
    for (const auto& c : spec.components) rest = subtract(rest, c.hh);
    if (spec.exceptional_count > 0)
        rest = subtract(rest, GradedDims::single(0, BigInt(spec.exceptional_count)));
    return rest;
}

} // namespace hhcalc
