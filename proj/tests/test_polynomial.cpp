#include "tropdeg/polynomial.hpp"

#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tropdeg;
using testutil::mono;
using testutil::pt;

namespace {

TropPoly poly(std::initializer_list<std::pair<Monomial, PerturbedScalar>> terms) {
    std::vector<TropPoly::Term> ts;
    std::size_t dim = terms.begin()->first.dim();
    for (auto& [m, c] : terms) ts.push_back({m, c});
    return TropPoly(dim, std::move(ts));
}

} // namespace

TEST_CASE("eval_poly basic examples") {
    // f = min{0, x+y}
    auto f = poly({{mono({0, 0}), 0}, {mono({1, 1}), 0}});
    auto r = eval_poly(f, pt({1, 1}));
    CHECK(r.value == PerturbedScalar(0));
    CHECK(r.argmin == std::set<std::size_t>{0});

    // f = min{x+inf, y+1}; canonical term order puts (0,1) first
    auto g = poly({{mono({1, 0}), PerturbedScalar::infinity()}, {mono({0, 1}), 1}});
    auto rg = eval_poly(g, pt({3, 0}));
    CHECK(rg.value == PerturbedScalar(1));
    CHECK(rg.argmin == std::set<std::size_t>{0});
    CHECK(g.terms()[0].monomial == mono({0, 1}));

    // f = min{x, y} at a tie
    auto h = poly({{mono({1, 0}), 0}, {mono({0, 1}), 0}});
    auto rh = eval_poly(h, pt({2, 2}));
    CHECK(rh.value == PerturbedScalar(2));
    CHECK(rh.argmin == std::set<std::size_t>{0, 1});

    CHECK_THROWS_AS(eval_poly(f, pt({1})), std::invalid_argument);
}

TEST_CASE("duplicate exponents merge by minimum") {
    auto f = poly({{mono({1, 0}), 5}, {mono({1, 0}), 2}});
    CHECK(f.terms().size() == 1);
    CHECK(f.terms()[0].coeff == PerturbedScalar(2));
}

TEST_CASE("all-infinite polynomial is rejected") {
    CHECK_THROWS_AS(poly({{mono({0, 0}), PerturbedScalar::infinity()}}), std::invalid_argument);
}

TEST_CASE("poly_degree ignores infinite terms") {
    CHECK(poly_degree(poly({{mono({0, 0}), 0}, {mono({1, 1}), 0}})) == 2);
    CHECK(poly_degree(poly({{mono({3, 2}), 1}})) == 5);
    CHECK(poly_degree(poly({{mono({1, 0}), PerturbedScalar::infinity()}, {mono({0, 1}), 0}})) == 1);
}

TEST_CASE("restrict_to_segment examples") {
    auto f = poly({{mono({2, 0}), 0}, {mono({0, 1}), 5}});
    Segment ray(pt({0, 0}), testutil::rv({-1, -1}), Rat(0), std::nullopt);
    auto r = restrict_to_segment(f, ray);
    REQUIRE(r.pieces.size() == 2);
    // terms are stored in canonical (sorted) order: (0,1) then (2,0)
    CHECK(r.pieces[0].slope == Rat(-1));
    CHECK(r.pieces[0].offset == PerturbedScalar(5));
    CHECK(r.pieces[1].slope == Rat(-2));
    CHECK(r.pieces[1].offset == PerturbedScalar(0));

    auto g = poly({{mono({1, 0}), 1}, {mono({1, 1}), 2}});
    Segment ray2(pt({1, 0}), testutil::rv({0, 1}), Rat(0), std::nullopt);
    auto r2 = restrict_to_segment(g, ray2);
    CHECK(r2.pieces[0].slope == Rat(0));
    CHECK(r2.pieces[0].offset == PerturbedScalar(2));
    CHECK(r2.pieces[1].slope == Rat(1));
    CHECK(r2.pieces[1].offset == PerturbedScalar(3));
}

TEST_CASE("restriction agrees with direct evaluation") {
    testutil::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<TropPoly::Term> ts;
        int nterms = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < nterms; ++i)
            ts.push_back({mono({rng.range(0, 3), rng.range(0, 3)}),
                          PerturbedScalar(rng.rat(-5, 5))});
        TropPoly f(2, std::move(ts));
        Point base{rng.rat(-3, 3), rng.rat(-3, 3)};
        RatVec dir{Rat(rng.range(-2, 2)), Rat(rng.range(-2, 2))};
        if (dir[0] == 0 && dir[1] == 0) dir[0] = 1;
        Segment seg(base, dir, std::nullopt, std::nullopt);
        auto r = restrict_to_segment(f, seg);
        for (int j = 0; j < 5; ++j) {
            Rat t = rng.rat(-10, 10);
            CHECK(r.eval(t) == eval_poly(f, seg.at(t)).value);
        }
    }
}
