#pragma once

#include <vector>

#include "hhcalc/bigint.hpp"
#include "hhcalc/poly.hpp"

namespace hhcalc {

/* Hypersurface of degree d in the (weighted) projective space with the given
 * weights. All weights 1 is the ordinary projective case; the double cover
 * of P^n branched in a degree-2k divisor is the weighted hypersurface with
 * weights (1,..,1,k) and degree 2k. */
struct VarietySpec {
    std::vector<int> weights;
    int degree = 0;

    bool is_ordinary() const; // all weights equal 1
    int weight_sum() const;
    int dimension() const; // #weights - 2

    // Throws InvalidSpecError unless weights are nonempty positive and degree >= 1.
    void validate() const;
};

// Weighted model of the double cover of P^n branched in a smooth degree-2k
// divisor: weights (1^{n+1}, k), degree 2k.
VarietySpec double_cover(int n, int k);

/* Square table h[p][q] = dim H^q(X, Omega^p) for a variety of dimension N.
 * Construction enforces Hodge symmetry (h[p][q] = h[q][p]), Serre symmetry
 * (h[p][q] = h[N-p][N-q]) and h[0][0] >= 1 (components of the variety). */
class HodgeDiamond {
public:
    HodgeDiamond(int dim, std::vector<std::vector<BigInt>> h);

    static HodgeDiamond projective_space(int n);

    int dim() const noexcept { return dim_; }

    const BigInt& h(int p, int q) const;

    bool operator==(const HodgeDiamond&) const = default;

private:
    int dim_;
    std::vector<std::vector<BigInt>> h_;
};

/* Poincare series of the Jacobian ring: prod_i (1 - t^{d-w_i}) / (1 - t^{w_i}),
 * expanded exactly. Requires d > w_i for every i (InvalidSpecError otherwise);
 * NotApplicableError when the division is inexact, which certifies that the
 * spec violates the quasi-smoothness convention the formula assumes. */
Polynomial jacobian_poincare(const VarietySpec& spec);

/* Hodge diamond of a smooth (quasi-smooth in the weighted case) hypersurface.
 * Off the middle row h[p][q] = delta_{p,q}; on the middle row the primitive
 * part h_prim^{N-q,q} is the coefficient of t^{(q+1)d - sum(w)} in the
 * Jacobian Poincare series, with +1 at the center when N is even. A degree-1
 * section of ordinary projective space short-circuits to the hyperplane P^{N}. */
HodgeDiamond hodge_hypersurface(const VarietySpec& spec);

HodgeDiamond hodge_projective_space(int n);

// dim H^1(X, T_X) for a smooth ordinary hypersurface of dimension >= 3: the
// degree-d coefficient of the Jacobian Poincare series.
BigInt deformation_dim(const VarietySpec& spec);

} // namespace hhcalc
