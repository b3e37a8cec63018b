#pragma once

#include <string>
#include <vector>

#include "hhcalc/graded.hpp"

namespace hhcalc {

struct SodComponent {
    std::string label;
    GradedDims hh; // Hochschild homology of the component
};

/* Semiorthogonal decomposition bookkeeping: Hochschild homology is additive
 * over the components, so the residual component is the total minus the known
 * pieces. Cohomology is NOT additive and inputs tagged as such are rejected
 * upstream at parse time. Each exceptional object contributes {0:1}. */
struct SodSpec {
    GradedDims total; // HH_* of the ambient category
    std::vector<SodComponent> components;
    long long exceptional_count = 0;
};

// HH_* left for the residual component. Throws NegativeDimensionError when the
// claimed pieces do not fit inside the total, MalformedSummandError on
// duplicate labels or a negative exceptional count.
GradedDims residual(const SodSpec& spec);

} // namespace hhcalc
