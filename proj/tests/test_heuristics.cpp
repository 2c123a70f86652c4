#include "doctest.h"

#include <random>

#include "starfree/errors.hpp"
#include "starfree/exact.hpp"
#include "starfree/generators.hpp"
#include "starfree/greedy.hpp"
#include "starfree/local_search.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace starfree;

namespace {

bool maximal_independent(const Graph& g, const VertexSet& s) { return is_independent(g, s) && is_dominating(g, s); }

// Replays a trace against the residual-degree rule.
void check_trace(const Graph& g, const GreedyTrace& trace) {
    std::vector<bool> alive(g.order(), true);
    for (const auto& pick : trace.picks) {
        auto residual_degree = [&](Vertex v) {
            std::size_t d = 0;
            for (Vertex u = 0; u < g.order(); ++u) d += alive[u] && g.adjacent(u, v);
            return d;
        };
        REQUIRE(alive[pick.vertex]);
        REQUIRE(residual_degree(pick.vertex) == pick.degree);
        for (Vertex v = 0; v < g.order(); ++v)
            if (alive[v]) REQUIRE(residual_degree(v) >= pick.degree);
        alive[pick.vertex] = false;
        for (Vertex u = 0; u < g.order(); ++u)
            if (g.adjacent(u, pick.vertex)) alive[u] = false;
    }
    for (Vertex v = 0; v < g.order(); ++v) REQUIRE_FALSE(alive[v]);
    REQUIRE(maximal_independent(g, trace.result));
}

} // namespace

TEST_CASE("greedy on named graphs") {
    const auto claw = greedy_mis(fixtures::star(3));
    CHECK(claw.picks == std::vector<GreedyPick>{{1, 1}, {2, 0}, {3, 0}});
    CHECK(claw.result == VertexSet(4, {1, 2, 3}));

    const auto p3 = greedy_mis(fixtures::path(3));
    CHECK(p3.picks == std::vector<GreedyPick>{{0, 1}, {2, 0}});
    CHECK(p3.result == VertexSet(3, {0, 2}));

    CHECK(greedy_mis(Graph()).result.empty());

    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t r = 3; r <= 5; ++r) {
            const auto g = star_forest(p, r);
            const auto result = greedy_mis(g).result;
            CHECK(result.size() == p * (r - 1));
            CHECK(result.size() == max_independent_set(g).optimum);
            for (std::size_t i = 0; i < p; ++i) CHECK_FALSE(result.contains(i * r));
        }
}

TEST_CASE("greedy traces follow the min-degree rule under every tie-break") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const auto g = random_gnp(1 + rng() % 25, 0.05 + 0.5 * (i % 10) / 10.0, rng());
        check_trace(g, greedy_mis(g));
        check_trace(g, greedy_mis(g, TieBreak::seeded(rng())));
    }
}

TEST_CASE("seeded greedy is reproducible") {
    const auto g = random_gnp(30, 0.2, 4);
    CHECK(greedy_mis(g, TieBreak::seeded(99)).picks == greedy_mis(g, TieBreak::seeded(99)).picks);
}

TEST_CASE("adversarial tie exploration finds the smallest greedy outcome") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        const auto g = random_gnp(8 + rng() % 5, 0.3, rng());
        const auto worst = greedy_worst_tie_break(g);
        REQUIRE(worst);
        check_trace(g, *worst);
        for (int s = 0; s < 20; ++s) CHECK(worst->result.size() <= greedy_mis(g, TieBreak::seeded(rng())).result.size());
    }
    CHECK_FALSE(greedy_worst_tie_break(Graph(30), 3).has_value());
}

TEST_CASE("find_t_improvement examples") {
    const auto p3 = fixtures::path(3);
    const auto mis2 = find_t_improvement(p3, ProblemKind::MIS, VertexSet(3, {1}), 2);
    REQUIRE(mis2);
    CHECK(mis2->l == VertexSet(3, {0, 1, 2}));
    CHECK(mis2->before == 1);
    CHECK(mis2->after == 2);

    CHECK_FALSE(find_t_improvement(p3, ProblemKind::MIS, VertexSet(3, {1}), 1));

    const auto mds1 = find_t_improvement(p3, ProblemKind::MDS, VertexSet(3, {0, 1}), 1);
    REQUIRE(mds1);
    CHECK(mds1->l == VertexSet(3, {0}));
    CHECK(mds1->after == 1);

    CHECK_THROWS_AS(find_t_improvement(p3, ProblemKind::MIS, VertexSet(3, {0, 1}), 1), InfeasibleSolution);
    CHECK_THROWS_AS(find_t_improvement(p3, ProblemKind::MIS, VertexSet(3, {1}), 0), std::invalid_argument);
}

TEST_CASE("find_t_improvement decides existence exactly like the definition") {
    std::mt19937_64 rng(123);
    for (int i = 0; i < 150; ++i) {
        const std::size_t n = 2 + rng() % 7;
        const auto g = fixtures::from_code(n, rng() & rng());
        for (auto kind : {ProblemKind::MDS, ProblemKind::MIS, ProblemKind::MIDS}) {
            // A random feasible starting set: the greedy result, a random maximal
            // independent set, or V for MDS with random removals.
            VertexSet s = kind == ProblemKind::MDS ? g.all_vertices() : greedy_mis(g, TieBreak::seeded(rng())).result;
            if (kind == ProblemKind::MIS && (rng() & 1u)) s = VertexSet(n);
            for (std::size_t t = 1; t <= 3; ++t) {
                const auto got = find_t_improvement(g, kind, s, t);
                const auto want = oracle::t_improvement(g, kind, oracle::to_mask(s), t);
                REQUIRE(got.has_value() == want.has_value());
                if (got) {
                    const auto next = s ^ got->l;
                    REQUIRE(is_feasible(g, kind, next));
                    const auto common = (s & got->l).size();
                    if (kind == ProblemKind::MIS) {
                        REQUIRE(next.size() > s.size());
                        REQUIRE(common <= t - 1);
                    } else {
                        REQUIRE(next.size() < s.size());
                        REQUIRE(common <= t);
                    }
                    REQUIRE(got->after == next.size());
                }
            }
        }
    }
}

TEST_CASE("t-local search examples") {
    const auto p3 = fixtures::path(3);
    const auto mis = t_local_search(p3, ProblemKind::MIS, VertexSet(3), 1, 100);
    CHECK(mis.final.set() == VertexSet(3, {0, 2}));
    CHECK(mis.iterations == 2);
    CHECK(mis.certified_local);
    CHECK(mis.final.provenance() == Provenance::local_search(1));

    const auto claw = fixtures::star(3);
    // No 1-improvement exists for the leaves: dropping any single leaf leaves it
    // undominated, and swapping a leaf for the centre does not shrink the set.
    const auto leaves1 = t_local_search(claw, ProblemKind::MDS, VertexSet(4, {1, 2, 3}), 1, 100);
    CHECK(leaves1.final.set() == VertexSet(4, {1, 2, 3}));
    CHECK(leaves1.iterations == 0);
    CHECK(leaves1.certified_local);

    const auto leaves2 = t_local_search(claw, ProblemKind::MDS, VertexSet(4, {1, 2, 3}), 2, 100);
    CHECK(leaves2.final.set() == VertexSet(4, {0}));
    CHECK(leaves2.iterations == 2);

    // From V the first 1-improvement in lexicographic order drops the centre.
    const auto full = t_local_search(claw, ProblemKind::MDS, std::nullopt, 1, 100);
    CHECK(full.improvements.front().l == VertexSet(4, {0}));
    CHECK(full.final.set() == VertexSet(4, {1, 2, 3}));
    CHECK(t_local_search(claw, ProblemKind::MDS, std::nullopt, 2, 100).final.set() == VertexSet(4, {0}));

    CHECK_THROWS_AS(t_local_search(p3, ProblemKind::MIS, VertexSet(3, {0, 1}), 1, 10), InfeasibleSolution);
    CHECK_THROWS_AS(t_local_search(p3, ProblemKind::MIS, std::nullopt, 0, 10), std::invalid_argument);
}

TEST_CASE("iteration budget") {
    const auto g = Graph(6);
    const auto cut = t_local_search(g, ProblemKind::MIS, VertexSet(6), 1, 2);
    CHECK(cut.iterations == 2);
    CHECK(cut.final.value() == 2);
    CHECK_FALSE(cut.certified_local);

    const auto exact_budget = t_local_search(g, ProblemKind::MIS, VertexSet(6), 1, 6);
    CHECK(exact_budget.certified_local);
}

TEST_CASE("local search properties") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 3 + rng() % 8;
        const auto g = random_gnp(n, 0.2 + 0.1 * (i % 5), rng());
        for (auto kind : {ProblemKind::MDS, ProblemKind::MIS, ProblemKind::MIDS}) {
            std::optional<VertexSet> start;
            if (kind == ProblemKind::MIS) start = VertexSet(n);
            for (std::size_t t = 1; t <= 3; ++t) {
                const auto out = t_local_search(g, kind, start, t, 1000);
                REQUIRE(out.certified_local);
                REQUIRE(out.iterations <= n);
                REQUIRE(out.iterations == out.improvements.size());
                std::size_t last = out.improvements.empty() ? 0 : out.improvements.front().before;
                for (const auto& imp : out.improvements) {
                    REQUIRE(imp.before == last);
                    REQUIRE((kind == ProblemKind::MIS ? imp.after > imp.before : imp.after < imp.before));
                    last = imp.after;
                }
                REQUIRE_FALSE(oracle::t_improvement(g, kind, oracle::to_mask(out.final.set()), t));
                for (std::size_t smaller = 1; smaller < t; ++smaller)
                    REQUIRE_FALSE(find_t_improvement(g, kind, out.final.set(), smaller));
                if (kind == ProblemKind::MIS) REQUIRE(maximal_independent(g, out.final.set()));
            }
        }
    }
}

TEST_CASE("default initial solutions and work estimate") {
    const auto g = fixtures::cycle(6);
    CHECK(default_initial_solution(g, ProblemKind::MDS) == g.all_vertices());
    CHECK(default_initial_solution(g, ProblemKind::MIS) == greedy_mis(g).result);
    CHECK(neighborhood_work_estimate(10, 2) == doctest::Approx(1e4));
}
