#ifndef STARFREE_RECOGNITION_HPP
#define STARFREE_RECOGNITION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "starfree/exact.hpp"
#include "starfree/graph.hpp"

namespace starfree {

/// An induced K_{1,r}: center adjacent to every leaf, leaves pairwise non-adjacent.
struct StarWitness {
    Vertex center = 0;
    std::vector<Vertex> leaves; // sorted

    bool verify(const Graph& g) const;
};

struct StarCheck {
    bool star_free = true;
    std::optional<StarWitness> witness;
};

/// The two ways a graph can fall outside the almost-K_{1,r}-free class.
struct AcfViolation {
    enum class Kind { EquivalentPairAdjacent, NeighborhoodDominationTooLarge };
    Kind kind;
    Vertex u = 0;
    Vertex v = 0;                    // second endpoint, EquivalentPairAdjacent only
    std::size_t domination_number = 0; // γ(G_u), NeighborhoodDominationTooLarge only

    bool verify(const Graph& g, std::size_t r, const SolverLimits& limits = {}) const;
    std::string to_string() const;
};

struct AcfCheck {
    bool almost_star_free = true;
    std::optional<AcfViolation> violation;
};

/// α of the subgraph induced by N(v).
std::size_t local_independence_number(const Graph& g, Vertex v, const SolverLimits& limits = {});

/// γ of the subgraph induced by N(v).
std::size_t local_domination_number(const Graph& g, Vertex v, const SolverLimits& limits = {});

/// No induced K_{1,r}. On failure the witness is centred at the smallest such vertex and
/// uses the first r members of the lexicographically smallest maximum independent set of
/// its neighbourhood. Requires r >= 2.
StarCheck is_star_free(const Graph& g, std::size_t r, const SolverLimits& limits = {});

/// {v : α(G_v) > r - 1}. A pair u, v is r-equivalent exactly when both lie in this set.
/// Requires r >= 3.
VertexSet r_equivalent_vertices(const Graph& g, std::size_t r, const SolverLimits& limits = {});

/// Membership in the almost-K_{1,r}-free class: the r-equivalent vertices form an
/// independent set (vacuously so when there are none) and every neighbourhood has
/// domination number at most r - 1. The independence clause is checked first; the first
/// violation in vertex order is reported. Requires r >= 3.
AcfCheck is_almost_star_free(const Graph& g, std::size_t r, const SolverLimits& limits = {});

} // namespace starfree

#endif
