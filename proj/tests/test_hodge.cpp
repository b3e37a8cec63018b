#include <doctest.h>

#include "hhcalc/errors.hpp"
#include "hhcalc/hodge.hpp"
#include "support/oracles.hpp"

using namespace hhcalc;

namespace {

VarietySpec spec(std::vector<int> weights, int degree) {
    return VarietySpec{std::move(weights), degree};
}

void check_equals_oracle(const Polynomial& p, const oracle::Poly& q) {
    const int deg = static_cast<int>(q.size()) - 1;
    CHECK(p.degree() == deg);
    for (int k = 0; k <= deg; ++k) CHECK(p.coeff(k) == q[static_cast<std::size_t>(k)]);
}

} // namespace

TEST_CASE("jacobian series matches direct expansion") {
    // (1 + t + t^2)^4 for the quartic K3
    check_equals_oracle(jacobian_poincare(spec({1, 1, 1, 1}, 4)),
                        oracle::pow(oracle::geometric(3), 4));
    CHECK(jacobian_poincare(spec({1, 1, 1, 1}, 4)) ==
          Polynomial({BigInt(1), BigInt(4), BigInt(10), BigInt(16), BigInt(19), BigInt(16),
                      BigInt(10), BigInt(4), BigInt(1)}));

    // conics in P^1: everything cancels
    CHECK(jacobian_poincare(spec({1, 1}, 2)) == Polynomial::one());

    // the weight-2 factor of the double cover cancels against its numerator
    check_equals_oracle(jacobian_poincare(spec({1, 1, 1, 1, 1, 1, 2}, 4)),
                        oracle::pow(oracle::geometric(3), 6));
}

TEST_CASE("jacobian series rejects degenerate specs") {
    CHECK_THROWS_AS(jacobian_poincare(spec({1, 2}, 2)), InvalidSpecError);  // d = w
    CHECK_THROWS_AS(jacobian_poincare(spec({1, 1}, 1)), InvalidSpecError);  // d = w
    CHECK_THROWS_AS(jacobian_poincare(spec({1, 3}, 2)), InvalidSpecError);  // d < w
    CHECK_THROWS_AS(jacobian_poincare(spec({}, 4)), InvalidSpecError);
    CHECK_THROWS_AS(jacobian_poincare(spec({1, 0}, 4)), InvalidSpecError);
    CHECK_THROWS_AS(jacobian_poincare(spec({1, 1}, 0)), InvalidSpecError);
}

TEST_CASE("inexact division certifies a convention violation") {
    // (1-t^5)(1-t^4) / ((1-t^2)(1-t^3)) leaves a cyclotomic factor uncancelled
    CHECK_THROWS_AS(jacobian_poincare(spec({2, 3}, 7)), NotApplicableError);
    CHECK_THROWS_AS(hodge_hypersurface(spec({2, 3, 2}, 7)), NotApplicableError);
}

TEST_CASE("quartic fourfold diamond") {
    const HodgeDiamond d = hodge_hypersurface(spec({1, 1, 1, 1, 1, 1}, 4));
    REQUIRE(d.dim() == 4);
    // middle row h^{4,0}..h^{0,4}
    CHECK(d.h(4, 0) == 0);
    CHECK(d.h(3, 1) == 21);
    CHECK(d.h(2, 2) == 142);
    CHECK(d.h(1, 3) == 21);
    CHECK(d.h(0, 4) == 0);
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q)
            if (p + q != 4) CHECK(d.h(p, q) == (p == q ? 1 : 0));
}

TEST_CASE("double cover diamond") {
    const HodgeDiamond d = hodge_hypersurface(spec({1, 1, 1, 1, 1, 1, 2}, 4));
    REQUIRE(d.dim() == 5);
    CHECK(d.h(5, 0) == 0);
    CHECK(d.h(4, 1) == 1);
    CHECK(d.h(3, 2) == 90);
    CHECK(d.h(2, 3) == 90);
    CHECK(d.h(1, 4) == 1);
    CHECK(d.h(0, 5) == 0);
    for (int p = 0; p <= 5; ++p) CHECK(d.h(p, p) == 1);
}

TEST_CASE("quartic K3 diamond") {
    const HodgeDiamond d = hodge_hypersurface(spec({1, 1, 1, 1}, 4));
    REQUIRE(d.dim() == 2);
    CHECK(d.h(2, 0) == 1);
    CHECK(d.h(1, 1) == 20); // 19 primitive + the hyperplane class
    CHECK(d.h(0, 2) == 1);
    CHECK(d.h(1, 0) == 0);
}

TEST_CASE("elliptic curve diamond is all ones") {
    const HodgeDiamond d = hodge_hypersurface(spec({1, 1, 1}, 3));
    REQUIRE(d.dim() == 1);
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) CHECK(d.h(p, q) == 1);
}

TEST_CASE("projective space diamond") {
    const HodgeDiamond p0 = hodge_projective_space(0);
    CHECK(p0.dim() == 0);
    CHECK(p0.h(0, 0) == 1);

    const HodgeDiamond p2 = hodge_projective_space(2);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) CHECK(p2.h(p, q) == (p == q ? 1 : 0));

    CHECK_THROWS_AS(hodge_projective_space(-1), InvalidSpecError);
}

TEST_CASE("hyperplanes degenerate to projective space") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n) + 1, 1);
        CHECK(hodge_hypersurface(spec(ones, 1)) == hodge_projective_space(n - 1));
    }
}

TEST_CASE("dimension zero: d points in the line") {
    const HodgeDiamond d = hodge_hypersurface(spec({1, 1}, 3));
    CHECK(d.dim() == 0);
    CHECK(d.h(0, 0) == 3);
}

TEST_CASE("euler characteristic agrees between the two summation routes") {
    const HodgeDiamond d = hodge_hypersurface(spec({1, 1, 1, 1, 1, 1}, 4));
    BigInt direct = 0;
    for (int p = 0; p <= d.dim(); ++p)
        for (int q = 0; q <= d.dim(); ++q)
            direct += ((p + q) % 2 == 0 ? d.h(p, q) : -d.h(p, q));
    // along antidiagonals p - q = n the sign (-1)^{p+q} is constant = (-1)^n
    BigInt by_antidiagonal = 0;
    for (int n = -d.dim(); n <= d.dim(); ++n) {
        BigInt level = 0;
        for (int p = 0; p <= d.dim(); ++p) {
            const int q = p - n;
            if (q >= 0 && q <= d.dim()) level += d.h(p, q);
        }
        by_antidiagonal += (n % 2 == 0 ? level : -level);
    }
    CHECK(direct == by_antidiagonal);
    CHECK(direct == 188);

    const HodgeDiamond y = hodge_hypersurface(spec({1, 1, 1, 1, 1, 1, 2}, 4));
    BigInt chi_y = 0;
    for (int p = 0; p <= y.dim(); ++p)
        for (int q = 0; q <= y.dim(); ++q)
            chi_y += ((p + q) % 2 == 0 ? y.h(p, q) : -y.h(p, q));
    CHECK(chi_y == -176);
}

TEST_CASE("deformation dimensions") {
    CHECK(deformation_dim(spec({1, 1, 1, 1, 1, 1}, 4)) == 90);

    // quintic threefold, cross-checked against the direct expansion
    const auto quintic = oracle::pow(oracle::geometric(4), 5);
    CHECK(oracle::coeff(quintic, 5) == 101);
    CHECK(deformation_dim(spec({1, 1, 1, 1, 1}, 5)) == 101);

    CHECK(deformation_dim(spec({1, 1, 1, 1, 1, 1}, 2)) == 0); // rigid quadric

    CHECK_THROWS_AS(deformation_dim(spec({1, 1, 1, 1, 1, 1, 2}, 4)), NotApplicableError);
    CHECK_THROWS_AS(deformation_dim(spec({1, 1, 1, 1}, 4)), NotApplicableError); // dim 2 < 3
}

TEST_CASE("double cover constructor") {
    const VarietySpec y = double_cover(5, 2);
    CHECK(y.weights == std::vector<int>{1, 1, 1, 1, 1, 1, 2});
    CHECK(y.degree == 4);
    CHECK_FALSE(y.is_ordinary());
    CHECK(y.dimension() == 5);
    CHECK(hodge_hypersurface(y) == hodge_hypersurface(spec({1, 1, 1, 1, 1, 1, 2}, 4)));
    CHECK_THROWS_AS(double_cover(0, 2), InvalidSpecError);
    CHECK_THROWS_AS(double_cover(3, 0), InvalidSpecError);
}
