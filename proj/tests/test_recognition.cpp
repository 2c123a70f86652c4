#include "doctest.h"

#include <random>

#include "starfree/generators.hpp"
#include "starfree/recognition.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace starfree;

TEST_CASE("local independence number") {
    const auto claw = fixtures::star(3);
    CHECK(local_independence_number(claw, 0) == 3);
    CHECK(local_independence_number(claw, 1) == 1);
    for (Vertex v = 0; v < 5; ++v) CHECK(local_independence_number(fixtures::cycle(5), v) == 2);
    CHECK_THROWS(local_independence_number(claw, 4));
}

TEST_CASE("star freeness") {
    const auto claw = is_star_free(fixtures::star(3), 3);
    CHECK_FALSE(claw.star_free);
    REQUIRE(claw.witness);
    CHECK(claw.witness->center == 0);
    CHECK(claw.witness->leaves == std::vector<Vertex>{1, 2, 3});

    CHECK(is_star_free(fixtures::cycle(5), 3).star_free);
    CHECK(is_star_free(star_forest(2, 4), 4).star_free);
    CHECK_FALSE(is_star_free(star_forest(2, 4), 3).star_free);
    CHECK(is_star_free(Graph(), 2).star_free);
    CHECK_THROWS_AS(is_star_free(fixtures::star(3), 1), std::invalid_argument);
}

TEST_CASE("r-equivalent vertices") {
    CHECK(r_equivalent_vertices(fixtures::cycle(5), 3).empty());
    CHECK(r_equivalent_vertices(fixtures::star(3), 3) == VertexSet(4, {0}));
    CHECK(r_equivalent_vertices(fan(5), 3) == VertexSet(6, {0}));
    CHECK_THROWS_AS(r_equivalent_vertices(fan(5), 2), std::invalid_argument);
}

TEST_CASE("almost star freeness") {
    CHECK(is_almost_star_free(fan(5), 3).almost_star_free);
    CHECK_FALSE(is_star_free(fan(5), 3).star_free);

    const auto claw = is_almost_star_free(fixtures::star(3), 3);
    CHECK_FALSE(claw.almost_star_free);
    REQUIRE(claw.violation);
    CHECK(claw.violation->kind == AcfViolation::Kind::NeighborhoodDominationTooLarge);
    CHECK(claw.violation->u == 0);
    CHECK(claw.violation->domination_number == 3);
    CHECK(claw.violation->verify(fixtures::star(3), 3));

    SUBCASE("adjacent equivalent centres") {
        // Two adjacent vertices, each with three private pendant leaves.
        const auto g = Graph::from_edge_list(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
        const auto check = is_almost_star_free(g, 3);
        REQUIRE(check.violation);
        CHECK(check.violation->kind == AcfViolation::Kind::EquivalentPairAdjacent);
        CHECK(check.violation->u == 0);
        CHECK(check.violation->v == 1);
        CHECK(check.violation->verify(g, 3));
    }
    CHECK_THROWS_AS(is_almost_star_free(fan(5), 2), std::invalid_argument);
}

TEST_CASE("recognizers agree with brute force on small graphs") {
    std::mt19937_64 rng(77);
    auto check_graph = [](const Graph& g) {
        for (std::size_t r = 2; r <= 4; ++r) {
            const auto star = is_star_free(g, r);
            bool local_bound = true;
            for (Vertex v = 0; v < g.order(); ++v) local_bound &= local_independence_number(g, v) <= r - 1;
            REQUIRE(star.star_free == !oracle::has_induced_star(g, r));
            REQUIRE(star.star_free == local_bound);
            if (!star.star_free) {
                REQUIRE(star.witness->leaves.size() == r);
                REQUIRE(star.witness->verify(g));
            }
            if (star.star_free)
                for (std::size_t bigger = r; bigger <= 5; ++bigger) REQUIRE(is_star_free(g, bigger).star_free);
            if (r >= 3) {
                const auto acf = is_almost_star_free(g, r);
                REQUIRE(acf.almost_star_free == oracle::almost_star_free(g, r));
                if (acf.violation) REQUIRE(acf.violation->verify(g, r));
                if (star.star_free) REQUIRE(acf.almost_star_free);
            }
        }
    };
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (1ull << (n * (n > 0 ? n - 1 : 0) / 2)); ++code)
            check_graph(fixtures::from_code(n, code));
    for (int i = 0; i < 300; ++i) check_graph(fixtures::from_code(6 + i % 2, rng()));
}

TEST_CASE("star-free graphs are almost star-free") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t r = 3 + seed % 2;
        const auto g = random_star_free(12, 0.3, r, seed);
        REQUIRE(is_star_free(g, r).star_free);
        CHECK(is_almost_star_free(g, r).almost_star_free);
    }
}
