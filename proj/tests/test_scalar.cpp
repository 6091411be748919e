#include "tropdeg/scalar.hpp"

#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tropdeg;

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(-4, 2)) == "-2");
    CHECK(rat_from_string("7/3") == Rat(7, 3));
    CHECK(rat_from_string("-5") == Rat(-5));
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("isqrt_ceil") {
    CHECK(isqrt_ceil(Int(0)) == 0);
    CHECK(isqrt_ceil(Int(1)) == 1);
    CHECK(isqrt_ceil(Int(2)) == 2);
    CHECK(isqrt_ceil(Int(4)) == 2);
    CHECK(isqrt_ceil(Int(10)) == 4);
}

TEST_CASE("extrat ordering and absorption") {
    ExtRat inf = ExtRat::infinity();
    CHECK(ExtRat(Rat(5)) < inf);
    CHECK(inf == inf + ExtRat(Rat(-100)));
    CHECK(extrat_to_string(inf) == "inf");
    CHECK(extrat_from_string("inf").is_inf());
}

TEST_CASE("perturbed scalar is ordered lexicographically") {
    PerturbedScalar a(ExtRat(Rat(1)), Rat(5));
    PerturbedScalar b(ExtRat(Rat(1)), Rat(6));
    PerturbedScalar c(ExtRat(Rat(2)), Rat(-100));
    CHECK(a < b);
    CHECK(b < c);
    CHECK_THROWS_AS(PerturbedScalar(ExtRat::infinity(), Rat(1)), std::invalid_argument);
}

TEST_CASE("perturbed order is total and compatible with addition") {
    testutil::Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        PerturbedScalar a(ExtRat(rng.rat(-10, 10)), rng.rat(-3, 3));
        PerturbedScalar b(ExtRat(rng.rat(-10, 10)), rng.rat(-3, 3));
        PerturbedScalar c(ExtRat(rng.rat(-10, 10)), rng.rat(-3, 3));
        // totality
        CHECK(((a < b) + (b < a) + (a == b)) == 1);
        // transitivity on a sorted triple
        if (a < b && b < c) CHECK(a < c);
        // translation invariance
        if (a < b) CHECK(a + c < b + c);
    }
}

TEST_CASE("realize substitutes a rational eta") {
    PerturbedScalar a(ExtRat(Rat(1)), Rat(-2));
    CHECK(a.realize(Rat(1, 4)) == ExtRat(Rat(1, 2)));
}
