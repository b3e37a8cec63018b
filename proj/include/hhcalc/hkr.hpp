#pragma once

#include <map>
#include <utility>

#include "hhcalc/bigint.hpp"
#include "hhcalc/graded.hpp"
#include "hhcalc/hodge.hpp"

namespace hhcalc {

/* Polyvector cohomology table of an N-dimensional variety:
 * (p, q) -> dim H^q(X, wedge^p T_X). Zero entries are absent. */
struct PolyvectorTable {
    int dim = 0;
    std::map<std::pair<int, int>, BigInt> a;

    // Validating factory; entries outside [0,dim]^2 or negative dims are rejected.
    static PolyvectorTable make(int dim, std::map<std::pair<int, int>, BigInt> a);

    BigInt at(int p, int q) const {
        auto it = a.find({p, q});
        return it == a.end() ? BigInt(0) : it->second;
    }

    bool operator==(const PolyvectorTable&) const = default;
};

// dim HH_n = sum over p - q = n of h[p][q], stored at degree -n.
GradedDims hh_homology(const HodgeDiamond& diamond);

// dim HH^n = sum over p + q = n of a(p, q).
GradedDims hh_cohomology_from_polyvectors(const PolyvectorTable& table);

// For trivial canonical bundle, wedge^p T = Omega^{N-p}, so a(p,q) = h[N-p][q].
// The triviality assertion is the caller's responsibility.
PolyvectorTable polyvectors_trivial_canonical(const HodgeDiamond& diamond);

// Calabi-Yau shift: a category with Serre functor [n] has HH^* = HH_*[-n];
// with homology stored at negated degrees this is shift by -n.
GradedDims cy_shift(const GradedDims& hh_hom, int n);

/* Named fixtures for the Enriques surface. Its canonical bundle is 2-torsion,
 * not trivial, so the polyvector table is not a diamond reflection and ships
 * as data: a(0,0)=1, a(1,1)=10, a(2,2)=1 (all other entries vanish). */
PolyvectorTable enriques_polyvectors();
HodgeDiamond enriques_hodge_diamond();

} // namespace hhcalc
