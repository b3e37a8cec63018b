#pragma once

#include <optional>
#include <vector>

#include "hhcalc/bigint.hpp"

namespace hhcalc {

// Dense univariate polynomial over the integers, coefficient of t^k at
// index k. Normalized: no trailing zero coefficients (zero poly = empty).
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial one() { return Polynomial({BigInt(1)}); }

    // 1 - t^k, k >= 1.
    static Polynomial one_minus_power(int k);

    // 1 + t^step + t^{2 step} + ... with `terms` summands.
    static Polynomial geometric(int terms, int step = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }

    BigInt coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    Polynomial operator*(const Polynomial& rhs) const;

    // Exact quotient by (1 - t^k), k >= 1; nullopt when the division leaves a
    // remainder.
    std::optional<Polynomial> divided_by_one_minus_power(int k) const;

    // coeff(i) == coeff(degree - i) for all i.
    bool is_palindromic() const;

    bool operator==(const Polynomial&) const = default;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

} // namespace hhcalc
