#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hhcalc/graded.hpp"

namespace hhcalc {

/* Serre functor data S_C = sigma o [n] where sigma generates a Z/q action
 * (q = 1 is the Calabi-Yau case). */
struct SerreDescriptor {
    int shift_n = 0;
    int twist_order_q = 1;

    bool operator==(const SerreDescriptor&) const = default;
};

// Label used for the identity group element in summand lists and fixtures.
inline constexpr const char* kIdentityLabel = "1";

/* One group element's contribution to the invariant-category cohomology:
 * `total` is dim HH^*(C, phi_g) per degree, `invariant` bounds the part of it
 * that survives taking G-invariants. */
struct EquivariantSummand {
    std::string label;
    GradedDims total;
    GradedInterval invariant;
};

// Pointwise interval sum of the summands' invariant intervals: the provable
// bounds on dim HH^*(C^G). Throws MalformedSummandError when a summand's
// invariant upper bound exceeds its total.
GradedInterval assemble_invariants(const std::vector<EquivariantSummand>& summands);

// The Serre functor acts trivially on HH^*, hence so does sigma = S_C o [-n];
// for the identity summand the invariant interval collapses to the full total.
// Throws NotApplicableError unless the summand is labeled as the identity and
// the descriptor twist order is >= 1.
EquivariantSummand pin_serre_trivial(const EquivariantSummand& identity, const SerreDescriptor& s);

/* Result of the Z/2 splitting solve: HH^*(C^{Z/2}) decomposes as
 * HH^*(C) ⊕ (invariant part of HH_*(C))[-n], so knowing the left side and
 * HH_*(C) bounds both unknowns per degree. */
struct Z2Split {
    GradedInterval hh_coh;        // HH^*(C), cohomological degrees
    GradedInterval invariant_hom; // invariant part of HH_*(C), homology convention
};

/* For every cohomological degree i the split forces
 *   known_cg(i) = hh_coh(i) + inv(i) where inv(i) <= hh_hom_c shifted by [-n].
 * Degrees are independent, so one interval pass is exact:
 *   inv(i) in [0, min(hom_shifted(i), known_cg(i))],
 *   hh_coh(i) in [known_cg(i) - inv_max(i), known_cg(i)];
 * hom_shifted(i) = 0 pins hh_coh(i) = known_cg(i). Throws InconsistentError if
 * a degree admits no assignment (unreachable for nonnegative inputs; kept as
 * a guard). */
Z2Split solve_z2_split(const GradedDims& known_cg, const GradedDims& hh_hom_c, int n);

// The invariant category C^{Z/q} has Serre functor [n]: twist order becomes 1.
SerreDescriptor invariant_serre(const SerreDescriptor& s);

// S_C^q = sigma^q o [n q] = [n q]: the fractional Calabi-Yau pair (p, q).
std::pair<long long, long long> fractional_cy_relation(const SerreDescriptor& s);

} // namespace hhcalc
