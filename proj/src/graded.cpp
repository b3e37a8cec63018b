#include "hhcalc/graded.hpp"

namespace hhcalc {

GradedDims shift(const GradedDims& v, int m) {
    GradedDims r;
    for (const auto& [deg, dim] : v.entries()) r.set(deg - m, dim);
    return r;
}

GradedDims direct_sum(const GradedDims& a, const GradedDims& b) {
    GradedDims r = a;
    for (const auto& [deg, dim] : b.entries()) r.add(deg, dim);
    return r;
}

GradedDims subtract(const GradedDims& a, const GradedDims& b) {
    GradedDims r = a;
    for (const auto& [deg, dim] : b.entries()) {
        BigInt rest = a.at(deg) - dim;
        if (rest < 0)
            throw NegativeDimensionError(deg, "summand dimension exceeds the total");
        r.set(deg, rest);
    }
    return r;
}

GradedDims dual(const GradedDims& v) {
    GradedDims r;
    for (const auto& [deg, dim] : v.entries()) r.set(-deg, dim);
    return r;
}

BigInt total_dim(const GradedDims& v) {
    BigInt t = 0;
    for (const auto& [deg, dim] : v.entries()) t += dim;
    return t;
}

} // namespace hhcalc
