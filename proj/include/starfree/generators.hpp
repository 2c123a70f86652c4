#ifndef STARFREE_GENERATORS_HPP
#define STARFREE_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "starfree/exact.hpp"
#include "starfree/graph.hpp"

namespace starfree {

// Random generators draw raw 64-bit words from std::mt19937_64, whose output sequence
// is fixed by the C++ standard. No <random> distributions are involved, so a given
// seed yields the same graph on every platform.

/// p disjoint copies of K_{1,r-1}; component i occupies [i*r, (i+1)*r), centre first.
/// Requires p >= 1, r >= 3.
Graph star_forest(std::size_t p, std::size_t r);

/// One vertex per edge of g (edges in lexicographic order); adjacent iff the edges share
/// an endpoint.
Graph line_graph(const Graph& g);

/// Vertex 0 joined to every vertex of the path 1-2-...-k.
Graph fan(std::size_t k);

/// G(n, prob): pairs (u, v), u < v, visited in lexicographic order; the pair is an edge
/// when (word >> 11) * 2^-53 < prob for the next generator word.
Graph random_gnp(std::size_t n, double prob, std::uint64_t seed);

/// Sample G(n, prob), then while an induced K_{1,r} exists, join the first two leaves of
/// the witness reported by is_star_free. Requires r >= 3.
Graph random_star_free(std::size_t n, double prob, std::size_t r, std::uint64_t seed,
                       const SolverLimits& limits = {});

struct StarForestSpec {
    std::size_t p;
    std::size_t r;
};
struct GnpSpec {
    std::size_t n;
    double prob;
};
struct StarFreeSpec {
    std::size_t n;
    double prob;
    std::size_t r;
};
struct FanSpec {
    std::size_t k;
};
struct LineGraphSpec;

using GeneratorKind = std::variant<StarForestSpec, GnpSpec, StarFreeSpec, FanSpec, std::shared_ptr<LineGraphSpec>>;

/// Line graph of whatever `inner` generates.
struct LineGraphSpec {
    GeneratorKind inner;
};

struct GeneratorSpec {
    GeneratorKind kind;
    std::uint64_t seed = 0;
};

/// Validates parameters (throws std::invalid_argument) and builds the graph.
Graph generate(const GeneratorSpec& spec, const SolverLimits& limits = {});

/// Short comma-free label, e.g. "star_free(n=12;prob=0.3;r=3)".
std::string describe(const GeneratorKind& kind);

} // namespace starfree

#endif
