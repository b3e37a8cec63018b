#include "hhcalc/poly.hpp"

#include <stdexcept>

namespace hhcalc {

Polynomial Polynomial::one_minus_power(int k) {
    if (k < 1) throw std::invalid_argument("one_minus_power needs k >= 1");
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(0));
    c.front() = 1;
    c.back() = -1;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::geometric(int terms, int step) {
    if (terms < 0 || step < 1) throw std::invalid_argument("geometric needs terms >= 0, step >= 1");
    std::vector<BigInt> c;
    if (terms > 0) {
        c.assign(static_cast<std::size_t>(step) * (terms - 1) + 1, BigInt(0));
        for (int i = 0; i < terms; ++i) c[static_cast<std::size_t>(i) * step] = 1;
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> c(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(c));
}

std::optional<Polynomial> Polynomial::divided_by_one_minus_power(int k) const {
    if (k < 1) throw std::invalid_argument("divided_by_one_minus_power needs k >= 1");
    if (is_zero()) return Polynomial{};
    /* f = g (1 - t^k) means g(j) = f(j) + g(j-k); the division is exact iff
     * the recurrence leaves the top k positions of g at zero beyond deg f - k. */
    const int n = degree();
    if (n < k) return std::nullopt;
    std::vector<BigInt> g(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int j = 0; j <= n; ++j) {
        g[static_cast<std::size_t>(j)] = coeffs_[static_cast<std::size_t>(j)];
        if (j >= k) g[static_cast<std::size_t>(j)] += g[static_cast<std::size_t>(j - k)];
    }
    for (int j = n - k + 1; j <= n; ++j)
        if (g[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    g.resize(static_cast<std::size_t>(n - k) + 1);
    return Polynomial(std::move(g));
}

bool Polynomial::is_palindromic() const {
    const int n = degree();
    for (int i = 0; i * 2 <= n; ++i)
        if (coeff(i) != coeff(n - i)) return false;
    return true;
}

} // namespace hhcalc
