#include "tropdeg/envelope.hpp"

#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tropdeg;

TEST_CASE("envelope of two crossing lines") {
    std::vector<EnvLine<Rat>> lines{{Rat(0), Rat(1), 0}, {Rat(2), Rat(0), 1}};
    auto env = lower_envelope(lines);
    REQUIRE(env.edges.size() == 2);
    CHECK(env.edges[0].line == 1); // larger slope wins to the left
    CHECK(env.edges[1].line == 0);
    REQUIRE(env.vertices.size() == 1);
    CHECK(env.vertices[0].t == Rat(1, 2));
}

TEST_CASE("dominated lines never appear") {
    std::vector<EnvLine<Rat>> lines{
        {Rat(1), Rat(0), 0}, {Rat(1), Rat(5), 1}, {Rat(0), Rat(100), 2}};
    auto env = lower_envelope(lines);
    for (const auto& e : env.edges) CHECK(e.line != 1);
}

TEST_CASE("collinear middle line is dropped from edges") {
    // offsets on a straight line in (slope, offset) space: middle never wins strictly
    std::vector<EnvLine<Rat>> lines{
        {Rat(0), Rat(0), 0}, {Rat(1), Rat(1), 1}, {Rat(2), Rat(2), 2}};
    auto env = lower_envelope(lines);
    REQUIRE(env.edges.size() == 2);
    CHECK(env.edges[0].line == 2);
    CHECK(env.edges[1].line == 0);
}

TEST_CASE("envelope agrees with pointwise minimum") {
    testutil::Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<EnvLine<Rat>> lines;
        std::size_t n = static_cast<std::size_t>(rng.range(1, 6));
        for (std::size_t i = 0; i < n; ++i)
            lines.push_back({rng.rat(-4, 4), rng.rat(-4, 4), i});
        auto env = lower_envelope(lines);
        for (int q = 0; q < 12; ++q) {
            Rat t = rng.rat(-8, 8);
            Rat best = env_value(lines[0], t);
            for (const auto& l : lines) best = std::min(best, env_value(l, t));
            // find the envelope edge containing t
            for (const auto& e : env.edges) {
                if (e.t_from && t < *e.t_from) continue;
                if (e.t_to && *e.t_to < t) continue;
                CHECK(env_value(lines[e.line], t) == best);
                break;
            }
        }
    }
}

TEST_CASE("clip drops edges outside the window") {
    std::vector<EnvLine<Rat>> lines{{Rat(0), Rat(1), 0}, {Rat(2), Rat(0), 1}};
    auto env = lower_envelope(lines);
    auto clipped = clip_envelope(env, std::optional<Rat>(Rat(1)), std::optional<Rat>());
    REQUIRE(clipped.edges.size() == 1);
    CHECK(clipped.edges[0].line == 0);
    CHECK(clipped.vertices.empty());
}

TEST_CASE("symbolic offsets break exact ties") {
    // identical base lines distinguished by the infinitesimal part
    std::vector<EnvLine<PerturbedScalar>> lines{
        {Rat(0), PerturbedScalar(ExtRat(Rat(0)), Rat(2)), 0},
        {Rat(0), PerturbedScalar(ExtRat(Rat(0)), Rat(1)), 1},
        {Rat(1), PerturbedScalar(ExtRat(Rat(0)), Rat(0)), 2}};
    auto env = lower_envelope(lines);
    REQUIRE(env.edges.size() == 2);
    CHECK(env.edges[0].line == 2);
    CHECK(env.edges[1].line == 1); // the eta-smaller of the two parallel lines
    REQUIRE(env.vertices.size() == 1);
    CHECK(env.vertices[0].t == PerturbedScalar(ExtRat(Rat(0)), Rat(1)));
}
