#include "doctest.h"

#include <random>

#include "starfree/exact.hpp"
#include "starfree/generators.hpp"
#include "starfree/recognition.hpp"
#include "support/fixtures.hpp"

using namespace starfree;

TEST_CASE("star forest layout") {
    CHECK(star_forest(1, 3) == Graph::from_edge_list(3, {{0, 1}, {0, 2}}));
    const auto g = star_forest(2, 5);
    CHECK(g.order() == 10);
    CHECK(g.size() == 8);
    CHECK(g.degree(0) == 4);
    CHECK(g.degree(5) == 4);
    CHECK_FALSE(g.adjacent(0, 5));
    CHECK_THROWS_AS(star_forest(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(star_forest(2, 2), std::invalid_argument);
}

TEST_CASE("star forest optima") {
    for (std::size_t p = 1; p <= 4; ++p)
        for (std::size_t r = 3; r <= 6; ++r) {
            const auto g = star_forest(p, r);
            CHECK(min_dominating_set(g).optimum == p);
            CHECK(max_independent_set(g).optimum == p * (r - 1));
            CHECK(min_independent_dominating_set(g).optimum == p);
        }
}

TEST_CASE("line graphs") {
    CHECK(line_graph(fixtures::star(3)) == fixtures::complete(3));
    CHECK(line_graph(fixtures::path(4)) == fixtures::path(3));
    // Cycles are self-line up to relabelling; the only 2-regular graph on 5 vertices is C5.
    const auto lc5 = line_graph(fixtures::cycle(5));
    CHECK(lc5.order() == 5);
    CHECK(lc5.size() == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(lc5.degree(v) == 2);
    CHECK(line_graph(Graph(4)).order() == 0);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 40; ++i) {
        const auto base = random_gnp(3 + rng() % 8, 0.4, rng());
        CHECK(is_star_free(line_graph(base), 3).star_free);
    }
}

TEST_CASE("fan") {
    const auto f5 = fan(5);
    CHECK(f5.order() == 6);
    CHECK(f5.size() == 9);
    CHECK(f5.degree(0) == 5);
    CHECK(induced_subgraph(f5, f5.neighborhood(0)).graph == fixtures::path(5));
}

TEST_CASE("random G(n, p)") {
    CHECK(random_gnp(9, 0.0, 5).size() == 0);
    CHECK(random_gnp(9, 1.0, 5) == fixtures::complete(9));
    CHECK(random_gnp(30, 0.3, 42) == random_gnp(30, 0.3, 42));
    CHECK_FALSE(random_gnp(30, 0.3, 42) == random_gnp(30, 0.3, 43));
    CHECK_THROWS_AS(random_gnp(3, 1.5, 0), std::invalid_argument);

    // Golden value, cross-checked against a separate MT19937-64 implementation.
    const std::vector<Edge> golden{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}};
    CHECK(random_gnp(6, 0.5, 1).edges() == golden);
    const auto g = random_gnp(200, 0.25, 7);
    const double density = static_cast<double>(g.size()) / (200.0 * 199.0 / 2.0);
    CHECK(density == doctest::Approx(0.25).epsilon(0.05));
}

TEST_CASE("random star-free graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        for (std::size_t r : {3u, 4u}) {
            const auto g = random_star_free(14, 0.35, r, seed);
            CHECK(is_star_free(g, r).star_free);
            CHECK(g == random_star_free(14, 0.35, r, seed));
            // Repair only adds edges.
            for (auto e : random_gnp(14, 0.35, seed).edges()) CHECK(g.adjacent(e.first, e.second));
        }
    }
    CHECK(random_star_free(8, 0.0, 3, 1) == Graph(8));
    CHECK_THROWS_AS(random_star_free(8, 0.2, 2, 1), std::invalid_argument);
}

TEST_CASE("generator specs") {
    CHECK(generate({StarForestSpec{2, 4}, 0}) == star_forest(2, 4));
    CHECK(generate({GnpSpec{10, 0.3}, 5}) == random_gnp(10, 0.3, 5));
    CHECK(generate({StarFreeSpec{10, 0.3, 3}, 5}) == random_star_free(10, 0.3, 3, 5));
    CHECK(generate({FanSpec{5}, 0}) == fan(5));
    const auto line = std::make_shared<LineGraphSpec>(LineGraphSpec{GnpSpec{7, 0.5}});
    CHECK(generate({line, 3}) == line_graph(random_gnp(7, 0.5, 3)));
    CHECK(describe(line) == "line(gnp(n=7;prob=0.5))");
    CHECK(describe(StarFreeSpec{12, 0.3, 3}) == "star_free(n=12;prob=0.3;r=3)");
}
