#include "hhcalc/hodge.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hhcalc/errors.hpp"

namespace hhcalc {

bool VarietySpec::is_ordinary() const {
    return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 1; });
}

int VarietySpec::weight_sum() const {
    return std::accumulate(weights.begin(), weights.end(), 0);
}

int VarietySpec::dimension() const {
    return static_cast<int>(weights.size()) - 2;
}

void VarietySpec::validate() const {
    if (weights.empty()) throw InvalidSpecError("weights must be nonempty");
    for (int w : weights)
        if (w < 1) throw InvalidSpecError("weights must be positive, got " + std::to_string(w));
    if (degree < 1) throw InvalidSpecError("degree must be positive, got " + std::to_string(degree));
}

VarietySpec double_cover(int n, int k) {
    if (n < 1) throw InvalidSpecError("double cover needs ambient dimension n >= 1");
    if (k < 1) throw InvalidSpecError("double cover needs branch half-degree k >= 1");
    VarietySpec spec;
    spec.weights.assign(static_cast<std::size_t>(n) + 1, 1);
    spec.weights.push_back(k);
    spec.degree = 2 * k;
    // Necessary well-formedness check for the cover model: the degree must be
    // divisible by the cover weight so a general member contains x_{n+1}^2.
    if (spec.degree % k != 0)
        throw InvalidSpecError("double cover weights do not divide the degree");
    return spec;
}

HodgeDiamond::HodgeDiamond(int dim, std::vector<std::vector<BigInt>> h)
    : dim_(dim), h_(std::move(h)) {
    if (dim_ < 0) throw std::invalid_argument("diamond dimension must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(dim_) + 1;
    if (h_.size() != n) throw std::invalid_argument("diamond must have dim+1 rows");
    for (const auto& row : h_)
        if (row.size() != n) throw std::invalid_argument("diamond rows must have dim+1 entries");
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (h_[p][q] < 0) throw std::invalid_argument("hodge numbers must be nonnegative");
            if (h_[p][q] != h_[q][p])
                throw std::invalid_argument("hodge symmetry violated at (" + std::to_string(p) +
                                            "," + std::to_string(q) + ")");
            if (h_[p][q] != h_[n - 1 - p][n - 1 - q])
                throw std::invalid_argument("serre symmetry violated at (" + std::to_string(p) +
                                            "," + std::to_string(q) + ")");
        }
    // h[0][0] counts connected components; 1 in the connected case.
    if (h_[0][0] < 1) throw std::invalid_argument("h[0][0] must be at least 1");
}

HodgeDiamond HodgeDiamond::projective_space(int n) {
    if (n < 0) throw std::invalid_argument("projective space dimension must be nonnegative");
    const std::size_t m = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<BigInt>> h(m, std::vector<BigInt>(m, BigInt(0)));
    for (std::size_t p = 0; p < m; ++p) h[p][p] = 1;
    return HodgeDiamond(n, std::move(h));
}

const BigInt& HodgeDiamond::h(int p, int q) const {
    if (p < 0 || q < 0 || p > dim_ || q > dim_)
        throw std::out_of_range("hodge index outside the diamond");
    return h_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

Polynomial jacobian_poincare(const VarietySpec& spec) {
    spec.validate();
    for (int w : spec.weights)
        if (spec.degree <= w)
            throw InvalidSpecError("degree must exceed every weight (got d=" +
                                   std::to_string(spec.degree) + ", w=" + std::to_string(w) + ")");
    Polynomial p = Polynomial::one();
    for (int w : spec.weights) p = p * Polynomial::one_minus_power(spec.degree - w);
    /* Divide factor by factor. Divisibility of the full product implies every
     * sequential exact division succeeds (cyclotomic multiplicities only ever
     * shrink), so one inexact step certifies global non-divisibility. */
    for (int w : spec.weights) {
        auto q = p.divided_by_one_minus_power(w);
        if (!q)
            throw NotApplicableError(
                "Jacobian series is not a polynomial; the spec violates the quasi-smoothness "
                "convention (inexact division by 1 - t^" +
                std::to_string(w) + ")");
        p = std::move(*q);
    }
    return p;
}

HodgeDiamond hodge_hypersurface(const VarietySpec& spec) {
    spec.validate();
    if (spec.weights.size() < 2)
        throw InvalidSpecError("hypersurface needs at least 2 weights (ambient dimension >= 1)");
    const int N = spec.dimension();
    // A degree-1 section of ordinary projective space is a hyperplane P^{N}.
    if (spec.degree == 1 && spec.is_ordinary()) return HodgeDiamond::projective_space(N);

    const Polynomial jac = jacobian_poincare(spec);
    const int s = spec.weight_sum();
    const std::size_t m = static_cast<std::size_t>(N) + 1;
    std::vector<std::vector<BigInt>> h(m, std::vector<BigInt>(m, BigInt(0)));
    for (int p = 0; p <= N; ++p)
        if (2 * p != N) h[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = 1;
    for (int q = 0; q <= N; ++q) {
        const int p = N - q;
        BigInt prim = jac.coeff((q + 1) * spec.degree - s);
        if (prim < 0)
            throw NotApplicableError("negative primitive Hodge number; the spec violates the "
                                     "quasi-smoothness convention");
        if (p == q) prim += 1; // hyperplane-power class in the even-dimensional middle
        h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = prim;
    }
    return HodgeDiamond(N, std::move(h));
}

HodgeDiamond hodge_projective_space(int n) {
    if (n < 0) throw InvalidSpecError("projective space dimension must be nonnegative");
    return HodgeDiamond::projective_space(n);
}

BigInt deformation_dim(const VarietySpec& spec) {
    spec.validate();
    if (!spec.is_ordinary())
        throw NotApplicableError("deformation dimension is implemented for ordinary projective "
                                 "hypersurfaces only");
    if (spec.dimension() < 3)
        throw NotApplicableError("deformation dimension needs variety dimension >= 3");
    return jacobian_poincare(spec).coeff(spec.degree);
}

} // namespace hhcalc
