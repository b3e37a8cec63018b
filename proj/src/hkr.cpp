#include "hhcalc/hkr.hpp"

#include <stdexcept>
#include <string>

namespace hhcalc {

PolyvectorTable PolyvectorTable::make(int dim, std::map<std::pair<int, int>, BigInt> a) {
    if (dim < 0) throw std::invalid_argument("polyvector table dimension must be nonnegative");
    PolyvectorTable t;
    t.dim = dim;
    for (auto& [pq, v] : a) {
        const auto [p, q] = pq;
        if (p < 0 || q < 0 || p > dim || q > dim)
            throw std::invalid_argument("polyvector entry (" + std::to_string(p) + "," +
                                        std::to_string(q) + ") outside the square");
        if (v < 0) throw std::invalid_argument("polyvector dims must be nonnegative");
        if (v != 0) t.a.emplace(pq, std::move(v));
    }
    return t;
}

GradedDims hh_homology(const HodgeDiamond& diamond) {
    GradedDims r;
    for (int p = 0; p <= diamond.dim(); ++p)
        for (int q = 0; q <= diamond.dim(); ++q) r.add(-(p - q), diamond.h(p, q));
    return r;
}

GradedDims hh_cohomology_from_polyvectors(const PolyvectorTable& table) {
    GradedDims r;
    for (const auto& [pq, v] : table.a) r.add(pq.first + pq.second, v);
    return r;
}

PolyvectorTable polyvectors_trivial_canonical(const HodgeDiamond& diamond) {
    std::map<std::pair<int, int>, BigInt> a;
    const int N = diamond.dim();
    for (int p = 0; p <= N; ++p)
        for (int q = 0; q <= N; ++q) {
            const BigInt& v = diamond.h(N - p, q);
            if (v != 0) a.emplace(std::make_pair(p, q), v);
        }
    return PolyvectorTable::make(N, std::move(a));
}

GradedDims cy_shift(const GradedDims& hh_hom, int n) {
    return shift(hh_hom, -n);
}

PolyvectorTable enriques_polyvectors() {
    return PolyvectorTable::make(2, {{{0, 0}, 1}, {{1, 1}, 10}, {{2, 2}, 1}});
}

HodgeDiamond enriques_hodge_diamond() {
    return HodgeDiamond(2, {{1, 0, 0}, {0, 10, 0}, {0, 0, 1}});
}

} // namespace hhcalc
