#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "hhcalc/bigint.hpp"
#include "hhcalc/errors.hpp"

namespace hhcalc {

/* Finitely supported dimension vector over the integers: degree -> dim.
 *
 * Convention used throughout: a cohomology group HH^i sits at degree i and a
 * homology group HH_m sits at degree -m, so the shift functor [s] acts the
 * same way on both (k[s] concentrated in degree -s). Stored entries are
 * always >= 1; zero entries are represented by absence. */
class GradedDims {
public:
    GradedDims() = default;

    GradedDims(std::initializer_list<std::pair<const int, BigInt>> entries) {
        for (const auto& [deg, dim] : entries) set(deg, dim);
    }

    static GradedDims single(int degree, BigInt dim) {
        GradedDims v;
        v.set(degree, std::move(dim));
        return v;
    }

    const std::map<int, BigInt>& entries() const noexcept { return entries_; }

    bool empty() const noexcept { return entries_.empty(); }

    // Dimension at a degree; zero when the degree is unsupported.
    BigInt at(int degree) const {
        auto it = entries_.find(degree);
        return it == entries_.end() ? BigInt(0) : it->second;
    }

    // Replaces the entry at `degree`. Zero erases; negative is a hard error.
    void set(int degree, BigInt dim) {
        if (dim < 0) throw NegativeDimensionError(degree);
        if (dim == 0)
            entries_.erase(degree);
        else
            entries_[degree] = std::move(dim);
    }

    void add(int degree, const BigInt& dim) { set(degree, at(degree) + dim); }

    bool operator==(const GradedDims&) const = default;

    // True when every entry of `other` is bounded by the entry here.
    bool dominates(const GradedDims& other) const {
        for (const auto& [deg, dim] : other.entries_)
            if (at(deg) < dim) return false;
        return true;
    }

private:
    std::map<int, BigInt> entries_;
};

// shift(v, m)(i) = v(i + m); shift by -s realizes the functor [s].
GradedDims shift(const GradedDims& v, int m);

GradedDims direct_sum(const GradedDims& a, const GradedDims& b);

// a minus b pointwise; throws NegativeDimensionError when b exceeds a somewhere.
GradedDims subtract(const GradedDims& a, const GradedDims& b);

// dual(v)(i) = v(-i).
GradedDims dual(const GradedDims& v);

BigInt total_dim(const GradedDims& v);

inline GradedDims operator+(const GradedDims& a, const GradedDims& b) { return direct_sum(a, b); }
inline GradedDims operator-(const GradedDims& a, const GradedDims& b) { return subtract(a, b); }

/* Pointwise interval of dimension vectors: lo(i) <= hi(i) for every degree.
 * Collapsed intervals (lo == hi) are the exact case. */
class GradedInterval {
public:
    GradedInterval() = default;

    GradedInterval(GradedDims lo, GradedDims hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        for (const auto& [deg, dim] : lo_.entries())
            if (hi_.at(deg) < dim)
                throw std::invalid_argument("interval bounds crossed at degree " +
                                            std::to_string(deg));
    }

    static GradedInterval collapsed(GradedDims v) {
        GradedInterval r;
        r.lo_ = v;
        r.hi_ = std::move(v);
        return r;
    }

    const GradedDims& lo() const noexcept { return lo_; }
    const GradedDims& hi() const noexcept { return hi_; }

    bool is_exact() const { return lo_ == hi_; }

    bool contains(const GradedDims& v) const { return v.dominates(lo_) && hi_.dominates(v); }

    bool operator==(const GradedInterval&) const = default;

private:
    GradedDims lo_, hi_;
};

inline GradedInterval interval_sum(const GradedInterval& a, const GradedInterval& b) {
    return {a.lo() + b.lo(), a.hi() + b.hi()};
}

inline GradedInterval interval_shift(const GradedInterval& v, int m) {
    return {shift(v.lo(), m), shift(v.hi(), m)};
}

} // namespace hhcalc
