#include "tropdeg/hilbert.hpp"

#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tropdeg;
using testutil::pt;
using testutil::rv;

TEST_CASE("monomial grids") {
    MonomialGrid simplex{2, Int(2), GridShape::Simplex};
    CHECK(simplex.count() == 6);
    CHECK(simplex.enumerate().size() == 6);
    MonomialGrid box{2, Int(2), GridShape::Box};
    CHECK(box.count() == 9);
    MonomialGrid huge{4, Int(200), GridShape::Box};
    CHECK_THROWS_AS(huge.enumerate(), BudgetExceeded);
}

TEST_CASE("count_classes examples") {
    CHECK(count_classes({rv({1, -1})}, {2, Int(2), GridShape::Simplex}).count() == 5);
    CHECK(count_classes({rv({3, -2})}, {2, Int(2), GridShape::Simplex}).count() == 6);
    CHECK(count_classes({rv({1, 0}), rv({0, 1})}, {2, Int(2), GridShape::Simplex}).count() == 6);
}

TEST_CASE("count_classes is basis independent") {
    testutil::Rng rng(31);
    RatMat basis{rv({1, -1}), rv({1, 1})};
    auto base_count = count_classes(basis, {2, Int(3), GridShape::Simplex}).count();
    CHECK(base_count == 10); // full-rank span separates everything
    // random unimodular recombinations of a rank-1 basis
    for (int trial = 0; trial < 10; ++trial) {
        Rat a(rng.range(1, 5));
        RatMat b1{rv({2, -3})};
        RatMat b2{{b1[0][0] * a, b1[0][1] * a}};
        CHECK(count_classes(b1, {2, Int(3), GridShape::Simplex}).count() ==
              count_classes(b2, {2, Int(3), GridShape::Simplex}).count());
    }
}

TEST_CASE("th of a segment is the class count with a verified certificate") {
    // a long enough segment of {x + y = 0}
    Polyhedron p(2, {Halfspace(rv({1, 1}), Rat(0), Rel::EQ),
                     Halfspace(rv({1, 0}), Rat(-50), Rel::GE),
                     Halfspace(rv({-1, 0}), Rat(-50), Rel::GE)});
    auto rec = th_polyhedron(p, {2, Int(2), GridShape::Simplex});
    CHECK(rec.exact);
    CHECK(rec.lower == 5);
    REQUIRE(rec.certificate);
    CHECK(rec.certificate->members.size() == 5);
    CHECK(verify_certificate(*rec.certificate, Prevariety::from_polyhedra({p})).ok);
}

TEST_CASE("th of a single point is one") {
    Polyhedron p(2, {Halfspace(rv({1, 0}), Rat(2), Rel::EQ),
                     Halfspace(rv({0, 1}), Rat(3), Rel::EQ)});
    auto rec = th_polyhedron(p, {2, Int(3), GridShape::Simplex});
    CHECK(rec.exact);
    CHECK(rec.lower == 1);
}

TEST_CASE("th of the 2x+3y segment") {
    Polyhedron p(2, {Halfspace(rv({2, 3}), Rat(6), Rel::EQ),
                     Halfspace(rv({1, 0}), Rat(-30), Rel::GE),
                     Halfspace(rv({-1, 0}), Rat(-30), Rel::GE)});
    auto rec = th_polyhedron(p, {2, Int(2), GridShape::Simplex});
    CHECK(rec.lower == 6);
}

TEST_CASE("th_points at and below the guaranteed degree") {
    std::vector<Point> pts{pt({0, 0}), pt({1, 1})};
    auto rec = th_points(pts, {2, Int(4), GridShape::Simplex});
    CHECK(rec.exact);
    CHECK(rec.lower == 2);
    REQUIRE(rec.certificate);
    CHECK(verify_certificate(*rec.certificate, Prevariety::from_points(pts)).ok);

    auto single = th_points({pt({2, 5})}, {2, Int(0), GridShape::Simplex});
    CHECK(single.exact);
    CHECK(single.lower == 1);

    std::vector<Point> three{pt({0, 0}), pt({1, 1}), pt({2, 2})};
    auto r3 = th_points(three, {2, Int(6), GridShape::Simplex});
    CHECK(r3.exact);
    CHECK(r3.lower == 3);
    for (const auto& m : r3.certificate->members)
        for (const auto& e : m.poly.terms()[0].monomial.exponents) CHECK(e < 3);

    // below n*s the search still settles this instance exactly
    auto rlow = th_points(pts, {2, Int(1), GridShape::Box});
    CHECK(rlow.lower == 2);
    CHECK(rlow.exact);
}

TEST_CASE("union bounds") {
    Polyhedron l1(2, {Halfspace(rv({1, 1}), Rat(0), Rel::EQ)});  // classes 2k+1
    Polyhedron l2(2, {Halfspace(rv({1, -1}), Rat(0), Rel::EQ)}); // classes via (1,1): k+1
    auto rec = th_union_bounds(Prevariety::from_polyhedra({l1, l2}), {2, Int(2), GridShape::Simplex});
    CHECK(rec.lower >= 5);
    CHECK(rec.upper == 8);

    auto one = th_union_bounds(Prevariety::from_polyhedra({l1}), {2, Int(2), GridShape::Simplex});
    CHECK(one.exact);
    CHECK(one.lower == 5);

    auto two_pts = th_union_bounds(Prevariety::from_points({pt({0, 0}), pt({1, 1})}),
                                   {2, Int(1), GridShape::Box}, 5000);
    CHECK(two_pts.exact);
    CHECK(two_pts.lower == 2);
}

TEST_CASE("line formula reconciliation") {
    auto a = line_formula_check(Int(2), Int(3), Int(2));
    CHECK(a.paper_value == 6);
    CHECK(a.enumerated_value == 6);
    CHECK(a.agree);

    auto b = line_formula_check(Int(1), Int(1), Int(2));
    CHECK(b.paper_value == 3);
    CHECK(b.enumerated_value == 5);
    CHECK_FALSE(b.agree);

    auto c = line_formula_check(Int(1), Int(0), Int(3));
    CHECK(c.paper_value == 3);
    CHECK(c.enumerated_value == 4);
    CHECK_FALSE(c.agree);

    CHECK_THROWS_AS(line_formula_check(Int(2), Int(4), Int(2)), std::invalid_argument);
}

TEST_CASE("monotone growth and shape comparison in k") {
    Polyhedron line(2, {Halfspace(rv({1, 1}), Rat(0), Rel::EQ)});
    std::size_t prev_simplex = 0;
    for (int k = 1; k <= 5; ++k) {
        auto s = count_classes(line.direction_basis(), {2, Int(k), GridShape::Simplex}).count();
        auto b = count_classes(line.direction_basis(), {2, Int(k), GridShape::Box}).count();
        CHECK(s >= prev_simplex);
        CHECK(s <= b);
        prev_simplex = s;
    }
}

TEST_CASE("eventual polynomial fit") {
    std::vector<HilbertRecord> recs;
    for (int k = 1; k <= 10; ++k) {
        HilbertRecord r;
        r.k = Int(k);
        r.lower = r.upper = static_cast<std::size_t>(2 * k + 1);
        r.exact = true;
        recs.push_back(r);
    }
    auto fit = eventual_poly_fit(recs, 1);
    REQUIRE(fit.stable);
    CHECK(fit.onset_k == 1);
    REQUIRE(fit.coeffs.size() == 2);
    CHECK(fit.coeffs[0] == Rat(1));
    CHECK(fit.coeffs[1] == Rat(2));

    std::vector<HilbertRecord> constant(recs.begin(), recs.begin() + 4);
    for (auto& r : constant) r.lower = r.upper = 7;
    auto cfit = eventual_poly_fit(constant, 0);
    REQUIRE(cfit.stable);
    CHECK(cfit.coeffs == std::vector<Rat>{Rat(7)});

    // full plane: t(k) = (k+1)(k+2)/2, a quadratic
    std::vector<HilbertRecord> quad;
    for (int k = 0; k <= 8; ++k) {
        HilbertRecord r;
        r.k = Int(k);
        r.lower = r.upper = static_cast<std::size_t>((k + 1) * (k + 2) / 2);
        r.exact = true;
        quad.push_back(r);
    }
    auto qfit = eventual_poly_fit(quad, 2);
    REQUIRE(qfit.stable);
    REQUIRE(qfit.coeffs.size() == 3);
    CHECK(qfit.coeffs[0] == Rat(1));
    CHECK(qfit.coeffs[1] == Rat(3, 2));
    CHECK(qfit.coeffs[2] == Rat(1, 2));

    CHECK_THROWS_AS(eventual_poly_fit(constant, 5), std::invalid_argument);
}
