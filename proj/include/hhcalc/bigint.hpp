#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hhcalc {

// Dimensions can exceed 64 bits (huge weighted specs), so all dimension and
// coefficient arithmetic is exact arbitrary-precision.
using BigInt = boost::multiprecision::cpp_int;

} // namespace hhcalc
