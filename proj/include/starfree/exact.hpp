#ifndef STARFREE_EXACT_HPP
#define STARFREE_EXACT_HPP

#include <cstddef>
#include <cstdint>

#include "starfree/graph.hpp"
#include "starfree/problem.hpp"

namespace starfree {

/// Largest graph the exact solvers accept. Solvers work on 64-bit masks, so the cap
/// itself may not exceed 64.
struct SolverLimits {
    std::size_t max_vertices = 40;
};

struct ExactResult {
    ProblemKind problem;
    std::size_t optimum = 0;
    VertexSet witness;          // lexicographically smallest optimal set
    std::uint64_t explored = 0; // search nodes visited
};

/// α(G) by branch and bound: degree-0/1 vertices are taken greedily, otherwise branch
/// on a maximum-degree vertex (in, then out) and prune with a greedy clique-cover bound.
ExactResult max_independent_set(const Graph& g, const SolverLimits& limits = {});

/// γ(G) by increasing-cardinality search over combinations in lexicographic order.
ExactResult min_dominating_set(const Graph& g, const SolverLimits& limits = {});

/// γ₀(G); same search restricted to independent partial sets.
ExactResult min_independent_dominating_set(const Graph& g, const SolverLimits& limits = {});

ExactResult solve_exact(const Graph& g, ProblemKind kind, const SolverLimits& limits = {});

} // namespace starfree

#endif
