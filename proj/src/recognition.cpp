#include "starfree/recognition.hpp"

#include <stdexcept>

namespace starfree {

namespace {

void require_r(std::size_t r, std::size_t minimum) {
    if (r < minimum)
        throw std::invalid_argument("r must be at least " + std::to_string(minimum) + ", got " + std::to_string(r));
}

} // namespace

bool StarWitness::verify(const Graph& g) const {
    if (center >= g.order()) return false;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (leaves[i] >= g.order() || leaves[i] == center || !g.adjacent(center, leaves[i])) return false;
        for (std::size_t j = i + 1; j < leaves.size(); ++j)
            if (leaves[i] == leaves[j] || g.adjacent(leaves[i], leaves[j])) return false;
    }
    return true;
}

bool AcfViolation::verify(const Graph& g, std::size_t r, const SolverLimits& limits) const {
    if (kind == Kind::EquivalentPairAdjacent)
        return g.adjacent(u, v) && local_independence_number(g, u, limits) > r - 1 &&
               local_independence_number(g, v, limits) > r - 1;
    const auto gamma = local_domination_number(g, u, limits);
    return gamma == domination_number && gamma > r - 1;
}

std::string AcfViolation::to_string() const {
    if (kind == Kind::EquivalentPairAdjacent)
        return "adjacent r-equivalent vertices " + std::to_string(u) + " and " + std::to_string(v);
    return "neighbourhood of vertex " + std::to_string(u) + " has domination number " +
           std::to_string(domination_number);
}

std::size_t local_independence_number(const Graph& g, Vertex v, const SolverLimits& limits) {
    return max_independent_set(induced_subgraph(g, g.neighborhood(v)).graph, limits).optimum;
}

std::size_t local_domination_number(const Graph& g, Vertex v, const SolverLimits& limits) {
    return min_dominating_set(induced_subgraph(g, g.neighborhood(v)).graph, limits).optimum;
}

StarCheck is_star_free(const Graph& g, std::size_t r, const SolverLimits& limits) {
    require_r(r, 2);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < r) continue;
        const auto local = induced_subgraph(g, g.neighborhood(v));
        const auto mis = max_independent_set(local.graph, limits);
        if (mis.optimum < r) continue;
        StarWitness w{v, {}};
        for (Vertex i : mis.witness.members()) {
            if (w.leaves.size() == r) break;
            w.leaves.push_back(local.original[i]);
        }
        return {false, std::move(w)};
    }
    return {true, std::nullopt};
}

VertexSet r_equivalent_vertices(const Graph& g, std::size_t r, const SolverLimits& limits) {
    require_r(r, 3);
    VertexSet out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) >= r && local_independence_number(g, v, limits) > r - 1) out.insert(v);
    return out;
}

AcfCheck is_almost_star_free(const Graph& g, std::size_t r, const SolverLimits& limits) {
    require_r(r, 3);
    const auto equivalent = r_equivalent_vertices(g, r, limits);
    for (Vertex u : equivalent.members()) {
        const auto clash = g.neighborhood(u) & equivalent;
        for (Vertex v : clash.members())
            if (u < v) return {false, AcfViolation{AcfViolation::Kind::EquivalentPairAdjacent, u, v, 0}};
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < r) continue; // γ(G_v) <= deg(v) <= r - 1
        const auto gamma = local_domination_number(g, v, limits);
        if (gamma > r - 1)
            return {false, AcfViolation{AcfViolation::Kind::NeighborhoodDominationTooLarge, v, 0, gamma}};
    }
    return {true, std::nullopt};
}

} // namespace starfree
