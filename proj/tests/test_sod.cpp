#include <doctest.h>

#include "hhcalc/errors.hpp"
#include "hhcalc/sod.hpp"

using namespace hhcalc;

TEST_CASE("residual after removing exceptional objects") {
    SodSpec quartic;
    quartic.total = GradedDims{{-2, 21}, {0, 146}, {2, 21}};
    quartic.exceptional_count = 2;
    CHECK(residual(quartic) == GradedDims{{-2, 21}, {0, 144}, {2, 21}});

    SodSpec cover;
    cover.total = GradedDims{{-3, 1}, {-1, 90}, {0, 6}, {1, 90}, {3, 1}};
    cover.exceptional_count = 4;
    CHECK(residual(cover) == GradedDims{{-3, 1}, {-1, 90}, {0, 2}, {1, 90}, {3, 1}});
}

TEST_CASE("a point is exhausted by one exceptional object") {
    SodSpec spec;
    spec.total = GradedDims::single(0, 1);
    spec.exceptional_count = 1;
    CHECK(residual(spec) == GradedDims{});
}

TEST_CASE("named components subtract like exceptional objects") {
    SodSpec spec;
    spec.total = GradedDims{{-1, 3}, {0, 5}};
    spec.components = {{"left", GradedDims{{-1, 1}}}, {"middle", GradedDims{{0, 2}}}};
    spec.exceptional_count = 1;
    CHECK(residual(spec) == GradedDims{{-1, 2}, {0, 2}});

    // order independence
    SodSpec swapped = spec;
    std::swap(swapped.components[0], swapped.components[1]);
    CHECK(residual(swapped) == residual(spec));

    // recombination: residual + components + exceptionals = total
    GradedDims back = residual(spec);
    for (const auto& c : spec.components) back = direct_sum(back, c.hh);
    back = direct_sum(back, GradedDims::single(0, spec.exceptional_count));
    CHECK(back == spec.total);
}

TEST_CASE("inconsistent decompositions are rejected") {
    SodSpec spec;
    spec.total = GradedDims::single(0, 1);
    spec.exceptional_count = 2;
    try {
        residual(spec);
        FAIL("expected NegativeDimensionError");
    } catch (const NegativeDimensionError& e) {
        CHECK(e.degree() == 0);
    }

    SodSpec missing;
    missing.total = GradedDims::single(0, 5);
    missing.components = {{"c", GradedDims{{1, 1}}}}; // total has nothing at degree 1
    CHECK_THROWS_AS(residual(missing), NegativeDimensionError);
}

TEST_CASE("malformed specs are rejected") {
    SodSpec dup;
    dup.total = GradedDims::single(0, 5);
    dup.components = {{"c", GradedDims::single(0, 1)}, {"c", GradedDims::single(0, 1)}};
    CHECK_THROWS_AS(residual(dup), MalformedSummandError);

    SodSpec negative;
    negative.total = GradedDims::single(0, 5);
    negative.exceptional_count = -1;
    CHECK_THROWS_AS(residual(negative), MalformedSummandError);
}
