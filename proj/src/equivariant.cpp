#include "hhcalc/equivariant.hpp"

#include <set>

#include "hhcalc/errors.hpp"

namespace hhcalc {

namespace {

void validate_summand(const EquivariantSummand& s) {
    for (const auto& [deg, dim] : s.invariant.hi().entries())
        if (s.total.at(deg) < dim)
            throw MalformedSummandError("summand \"" + s.label +
                                        "\": invariant exceeds total at degree " +
                                        std::to_string(deg));
}

} // namespace

GradedInterval assemble_invariants(const std::vector<EquivariantSummand>& summands) {
    std::set<std::string> seen;
    GradedInterval acc;
    for (const auto& s : summands) {
        if (!seen.insert(s.label).second)
            throw MalformedSummandError("duplicate summand label \"" + s.label + "\"");
        validate_summand(s);
        acc = interval_sum(acc, s.invariant);
    }
    return acc;
}

EquivariantSummand pin_serre_trivial(const EquivariantSummand& identity,
                                     const SerreDescriptor& s) {
    if (identity.label != kIdentityLabel)
        throw NotApplicableError("serre-triviality pin applies to the identity summand only "
                                 "(label \"" + identity.label + "\")");
    if (s.twist_order_q < 1)
        throw NotApplicableError("twist order must be >= 1");
    EquivariantSummand pinned = identity;
    pinned.invariant = GradedInterval::collapsed(identity.total);
    return pinned;
}

Z2Split solve_z2_split(const GradedDims& known_cg, const GradedDims& hh_hom_c, int n) {
    const GradedDims hom_shifted = shift(hh_hom_c, -n); // cohomological degrees

    GradedDims coh_lo, coh_hi, inv_lo, inv_hi;
    std::set<int> degrees;
    for (const auto& [deg, dim] : known_cg.entries()) degrees.insert(deg);
    for (const auto& [deg, dim] : hom_shifted.entries()) degrees.insert(deg);

    for (int i : degrees) {
        const BigInt known = known_cg.at(i);
        const BigInt cap = hom_shifted.at(i);
        const BigInt inv_max = cap < known ? cap : known;
        if (inv_max < 0) throw InconsistentError(i);
        // Stored back in homology convention: the contribution at cohomological
        // degree i entered through the [-n] shift from homology degree i - n.
        inv_hi.set(i - n, inv_max);
        coh_hi.set(i, known);
        coh_lo.set(i, known - inv_max);
    }
    return {GradedInterval(std::move(coh_lo), std::move(coh_hi)),
            GradedInterval(std::move(inv_lo), std::move(inv_hi))};
}

SerreDescriptor invariant_serre(const SerreDescriptor& s) {
    return {s.shift_n, 1};
}

std::pair<long long, long long> fractional_cy_relation(const SerreDescriptor& s) {
    return {static_cast<long long>(s.shift_n) * s.twist_order_q, s.twist_order_q};
}

} // namespace hhcalc
