#include "tropdeg/star_degree.hpp"

#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tropdeg;
using testutil::pt;
using testutil::rv;

TEST_CASE("star_B formula") {
    CHECK(star_B(Star(pt({0, 0}), {rv({1, 0}), rv({0, 1}), rv({-1, -1})})) == 2);
    CHECK(star_B(Star(pt({0, 0}), {rv({1, 2}), rv({-3, 1}), rv({0, -1})})) == 6);
    CHECK(star_B(Star(pt({0, 0, 0}),
                      {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1}), rv({-1, -1, -1})})) == 3);
}

TEST_CASE("subadditive_lower") {
    std::vector<std::pair<Int, Rat>> vals;
    for (int k = 1; k <= 5; ++k) vals.emplace_back(Int(k), Rat(2 * k));
    CHECK(subadditive_lower(vals, Int(1)) == Rat(9, 5));
    std::vector<std::pair<Int, Rat>> ident;
    for (int k = 1; k <= 4; ++k) ident.emplace_back(Int(k), Rat(k));
    CHECK(subadditive_lower(ident, Int(0)) == Rat(1));
    CHECK_THROWS_AS(subadditive_lower({}, Int(0)), std::invalid_argument);
}

TEST_CASE("tropical line star recursion at k=5") {
    Star star(pt({0, 0}), {rv({1, 0}), rv({0, 1}), rv({-1, -1})});
    auto sc = star_lower_construct(star, Int(5));
    CHECK(sc.construction.C == 2);
    CHECK(sc.construction.B == 2);
    std::vector<std::pair<Int, Int>> expected{{1, 1}, {1, 2}, {1, 3}, {1, 4},
                                              {2, 4}, {3, 4}, {4, 4}};
    CHECK(sc.construction.w_points == expected);
    CHECK(sc.construction.D == 8);
    CHECK(Int(sc.construction.w_points.size()) >= Int(5) * 2 - 8);
    CHECK(verify_certificate(sc.certificate, star_to_prevariety(star)).ok);
}

TEST_CASE("tropical line |W| grows by B") {
    Star star(pt({0, 0}), {rv({1, 0}), rv({0, 1}), rv({-1, -1})});
    std::vector<std::size_t> sizes;
    for (int k = 5; k <= 8; ++k) sizes.push_back(star_lower_construct(star, Int(k)).construction.w_points.size());
    CHECK(sizes == std::vector<std::size_t>{7, 9, 11, 13});
}

TEST_CASE("k at or below C is rejected") {
    Star star(pt({0, 0}), {rv({1, 0}), rv({0, 1}), rv({-1, -1})});
    CHECK_THROWS_AS(star_lower_construct(star, Int(2)), std::invalid_argument);
}

TEST_CASE("reflection normalization handles the positive quadrant star") {
    Star star(pt({0, 0}), {rv({1, 0}), rv({0, 1})});
    auto sc = star_lower_construct(star, Int(6));
    CHECK(sc.construction.reflect_x);
    CHECK(sc.construction.reflect_y);
    CHECK(Int(sc.construction.w_points.size()) >= Int(6) * sc.construction.B - sc.construction.D);
    CHECK(verify_certificate(sc.certificate, star_to_prevariety(star)).ok);
}

TEST_CASE("two opposite rays") {
    Star star(pt({0, 0}), {rv({1, 0}), rv({-1, 0})});
    CHECK(star_B(star) == 1);
    auto sc = star_lower_construct(star, Int(9));
    // with the coincident edge classified static the bound is tight
    CHECK(Int(sc.construction.w_points.size()) == Int(9) - sc.construction.D);
    CHECK(verify_certificate(sc.certificate, star_to_prevariety(star)).ok);
}

TEST_CASE("translated apex keeps the certificate valid") {
    Star star(pt({3, -2}), {rv({1, 0}), rv({0, 1}), rv({-1, -1})});
    auto sc = star_lower_construct(star, Int(5));
    CHECK(verify_certificate(sc.certificate, star_to_prevariety(star)).ok);
    CHECK(sc.construction.w_points.size() == 7);
}

TEST_CASE("star upper check on tiny stars") {
    Star line_star(pt({0, 0}), {rv({1, 0}), rv({0, 1}), rv({-1, -1})});
    auto rep = star_upper_check(line_star, Int(2), 4000);
    CHECK(rep.bound == 5);
    CHECK(rep.within_bound);
    CHECK(rep.search_value >= 3);

    Star single(pt({0, 0}), {rv({1, 0})});
    auto rs = star_upper_check(single, Int(2), 4000);
    CHECK(rs.bound == 3);
    CHECK(rs.within_bound);
    CHECK(rs.search_value == 3); // one ray holds exactly k+1 monomial classes
}

TEST_CASE("concave slopes attainment") {
    std::vector<ExtRat> a{ExtRat(Rat(8)), ExtRat(Rat(4)), ExtRat(Rat(2)), ExtRat(Rat(1))};
    auto rep = concave_slopes(a);
    REQUIRE(rep.ok);
    CHECK(rep.t == 3);
    CHECK(rep.breakpoints == std::vector<Rat>{Rat(4), Rat(2), Rat(1)});

    auto single = concave_slopes({ExtRat(Rat(3))});
    CHECK(single.ok);
    CHECK(single.t == 0);

    std::vector<ExtRat> padded = a;
    padded.push_back(ExtRat::infinity());
    padded.push_back(ExtRat(Rat(100)));
    auto rp = concave_slopes(padded);
    REQUIRE(rp.ok);
    CHECK(rp.t == 3);

    std::vector<ExtRat> bad{ExtRat(Rat(8)), ExtRat(Rat(5)), ExtRat(Rat(4))};
    auto rb = concave_slopes(bad);
    CHECK(rb.ok); // chain stops at t=1, still valid through there
    CHECK(rb.t == 1);
}

TEST_CASE("degree bounds for a star under the box grid") {
    Star star(pt({0, 0}), {rv({1, 0}), rv({0, 1}), rv({-1, -1})});
    auto db = degree_bounds_star(star, Int(12));
    CHECK(db.upper == Rat(2));
    CHECK(db.lower > Rat(1));
    CHECK(db.lower <= db.upper);
}

TEST_CASE("degree bounds for a segment prevariety") {
    // the line {x + y = 0}: class slope 2 under the simplex grid
    Prevariety v = Prevariety::from_polyhedra({Polyhedron(2, {Halfspace(rv({1, 1}), Rat(0), Rel::EQ)})});
    auto db = degree_bounds(v, GridShape::Simplex, Int(6));
    CHECK(db.upper == Rat(2));
    CHECK(db.lower > Rat(1));
}

TEST_CASE("degree bounds of a single point") {
    Prevariety v = Prevariety::from_points({pt({1, 1})});
    auto db = degree_bounds(v, GridShape::Simplex, Int(3));
    CHECK(db.lower == Rat(0));
    CHECK(db.upper == Rat(0));
}
