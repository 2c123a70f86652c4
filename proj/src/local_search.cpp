#include "starfree/local_search.hpp"

#include <cmath>
#include <stdexcept>

#include "starfree/errors.hpp"
#include "starfree/greedy.hpp"

namespace starfree {

namespace {

// Calls f on every k-subset of `items` in lexicographic order until f returns true.
template <class F>
bool for_each_combination(const std::vector<Vertex>& items, std::size_t k, F&& f) {
    if (k > items.size()) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<Vertex> pick(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) pick[i] = items[idx[i]];
        if (f(pick)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::optional<Improvement> find_t_improvement(const Graph& g, ProblemKind kind, const VertexSet& s, std::size_t t) {
    if (t == 0) throw std::invalid_argument("t must be at least 1");
    if (!is_feasible(g, kind, s))
        throw InfeasibleSolution(s.to_string() + " is not feasible for " + std::string(to_string(kind)));

    const auto inside = s.members();
    const auto outside = (g.all_vertices() - s).members();
    std::optional<Improvement> found;

    if (sense(kind) == Sense::Min) {
        for (std::size_t removed = 1; removed <= std::min(t, inside.size()) && !found; ++removed) {
            for_each_combination(inside, removed, [&](const std::vector<Vertex>& d) {
                VertexSet kept = s;
                for (Vertex v : d) kept.erase(v);
                for (std::size_t added = 0; added < removed; ++added) {
                    const bool hit = for_each_combination(outside, added, [&](const std::vector<Vertex>& a) {
                        VertexSet next = kept;
                        for (Vertex v : a) next.insert(v);
                        if (!is_feasible(g, kind, next)) return false;
                        found = Improvement{symmetric_difference(s, next), s.size(), next.size()};
                        return true;
                    });
                    if (hit) return true;
                }
                return false;
            });
        }
        return found;
    }

    for (std::size_t removed = 0; removed + 1 <= t && removed <= inside.size() && !found; ++removed) {
        for_each_combination(inside, removed, [&](const std::vector<Vertex>& d) {
            VertexSet kept = s;
            for (Vertex v : d) kept.erase(v);
            VertexSet blocked = kept;
            kept.for_each([&](Vertex v) { blocked |= g.neighborhood(v); });
            std::vector<Vertex> free;
            for (Vertex v : outside)
                if (!blocked.contains(v)) free.push_back(v);
            return for_each_combination(free, removed + 1, [&](const std::vector<Vertex>& a) {
                VertexSet added(g.order(), a);
                if (!is_independent(g, added)) return false;
                VertexSet next = kept | added;
                found = Improvement{symmetric_difference(s, next), s.size(), next.size()};
                return true;
            });
        });
    }
    return found;
}

VertexSet default_initial_solution(const Graph& g, ProblemKind kind) {
    if (kind == ProblemKind::MDS) return g.all_vertices();
    return greedy_mis(g).result;
}

LocalSearchOutcome t_local_search(const Graph& g, ProblemKind kind, std::optional<VertexSet> initial, std::size_t t,
                                  std::size_t max_iterations) {
    if (t == 0) throw std::invalid_argument("t must be at least 1");
    VertexSet current = initial ? std::move(*initial) : default_initial_solution(g, kind);
    if (!is_feasible(g, kind, current))
        throw InfeasibleSolution("initial solution " + current.to_string() + " is not feasible for " +
                                 std::string(to_string(kind)));

    std::vector<Improvement> applied;
    bool certified = false;
    std::size_t iterations = 0;
    while (true) {
        if (iterations == max_iterations) {
            // One more probe: the budget may have run out exactly at a local optimum.
            certified = !find_t_improvement(g, kind, current, t).has_value();
            break;
        }
        auto step = find_t_improvement(g, kind, current, t);
        if (!step) {
            certified = true;
            break;
        }
        current ^= step->l;
        applied.push_back(std::move(*step));
        ++iterations;
    }
    return LocalSearchOutcome{Solution(g, kind, std::move(current), Provenance::local_search(t)), iterations,
                              std::move(applied), certified};
}

double neighborhood_work_estimate(std::size_t n, std::size_t t) {
    return std::pow(static_cast<double>(n), 2.0 * static_cast<double>(t));
}

} // namespace starfree
