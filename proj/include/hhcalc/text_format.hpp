#pragma once

#include <string>

#include "hhcalc/graded.hpp"
#include "hhcalc/hodge.hpp"

namespace hhcalc {

/* Staggered diamond layout, one antidiagonal p + q = s per line, largest p
 * leftmost:
 *           1
 *         0   0
 *       1  20   1
 *         0   0
 *           1
 */
std::string format_diamond(const HodgeDiamond& d);

// Shift-notation rendering, "k^21[2] + k^146 + k^21[-2]"; an entry of
// dimension m at degree i reads k^m[-i], "0" for the empty vector.
std::string format_dims(const GradedDims& v);

// "= v" when collapsed, otherwise "lo v / hi w".
std::string format_interval(const GradedInterval& v);

} // namespace hhcalc
