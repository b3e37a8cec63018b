#include <doctest.h>

#include "hhcalc/errors.hpp"
#include "hhcalc/hkr.hpp"
#include "hhcalc/hodge.hpp"
#include "hhcalc/orbifold.hpp"

using namespace hhcalc;

TEST_CASE("identity element reproduces the polyvector total") {
    // codim 0, table = polyvectors of the underlying variety: the identity
    // contribution is plain HH^*.
    HodgeDiamond k3 = hodge_hypersurface(VarietySpec{{1, 1, 1, 1}, 4});
    PolyvectorTable poly = polyvectors_trivial_canonical(k3);

    GradedDims expected{{0, 1}, {2, 22}, {4, 1}};
    FixedLocusDatum id = make_fixed_locus_datum("1", 0, poly.a,
                                                GradedInterval::collapsed(expected));
    CHECK(element_contribution(id) == hh_cohomology_from_polyvectors(poly));

    GradedInterval total = orbifold_hh({id});
    CHECK(total.is_exact());
    CHECK(total.lo() == expected);
}

TEST_CASE("codimension shifts an isolated fixed point") {
    // A fixed point on a surface: one section in bidegree (0, 0), codim 2.
    FixedLocusDatum pt = make_fixed_locus_datum(
        "rot", 2, {{{0, 0}, 1}}, GradedInterval::collapsed(GradedDims::single(2, 1)));
    CHECK(element_contribution(pt) == GradedDims::single(2, 1));
    CHECK(orbifold_hh({pt}).lo() == GradedDims::single(2, 1));
}

TEST_CASE("free action: only the identity contributes") {
    HodgeDiamond k3 = hodge_hypersurface(VarietySpec{{1, 1, 1, 1}, 4});
    FixedLocusDatum id = make_fixed_locus_datum(
        "1", 0, polyvectors_trivial_canonical(k3).a,
        GradedInterval::collapsed(GradedDims{{0, 1}, {2, 10}, {4, 1}}));
    FixedLocusDatum sigma = make_fixed_locus_datum("sigma", 0, {});

    GradedInterval total = orbifold_hh({id, sigma});
    CHECK(total.is_exact());
    CHECK(total.lo() == hh_cohomology_from_polyvectors(enriques_polyvectors()));
}

TEST_CASE("unconstrained elements produce honest intervals") {
    FixedLocusDatum id = make_fixed_locus_datum(
        "1", 0, {{{0, 0}, 1}}, GradedInterval::collapsed(GradedDims::single(0, 1)));
    FixedLocusDatum g = make_fixed_locus_datum("g", 1, {{{0, 0}, 2}, {{1, 1}, 3}});
    CHECK(element_contribution(g) == GradedDims{{1, 2}, {3, 3}});

    GradedInterval total = orbifold_hh({id, g});
    CHECK_FALSE(total.is_exact());
    CHECK(total.lo() == GradedDims::single(0, 1));
    CHECK(total.hi() == GradedDims{{0, 1}, {1, 2}, {3, 3}});
}

TEST_CASE("element order does not matter and labels may repeat") {
    // Conjugacy classes are often listed with multiplicity under one name.
    FixedLocusDatum a = make_fixed_locus_datum("g", 1, {{{0, 0}, 1}});
    FixedLocusDatum b = make_fixed_locus_datum("g", 2, {{{0, 1}, 4}});
    GradedInterval fwd = orbifold_hh({a, b});
    GradedInterval rev = orbifold_hh({b, a});
    CHECK(fwd == rev);
    CHECK(fwd.hi() == GradedDims{{1, 1}, {3, 4}});
}

TEST_CASE("malformed data are rejected") {
    CHECK_THROWS_AS(make_fixed_locus_datum("g", -1, {}), MalformedDatumError);
    CHECK_THROWS_AS(make_fixed_locus_datum("g", 0, {{{-1, 0}, 1}}), MalformedDatumError);
    CHECK_THROWS_AS(make_fixed_locus_datum("g", 0, {{{0, -2}, 1}}), MalformedDatumError);
    CHECK_THROWS_AS(make_fixed_locus_datum("g", 0, {{{0, 0}, -1}}), MalformedDatumError);
    // invariant exceeding the contribution
    CHECK_THROWS_AS(make_fixed_locus_datum(
                        "g", 0, {{{0, 0}, 1}},
                        GradedInterval::collapsed(GradedDims::single(0, 2))),
                    MalformedDatumError);
    // zero entries in the table are tolerated and dropped
    FixedLocusDatum z = make_fixed_locus_datum("g", 0, {{{0, 0}, 0}, {{1, 0}, 2}});
    CHECK(element_contribution(z) == GradedDims::single(1, 2));
}
