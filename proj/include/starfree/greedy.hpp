#ifndef STARFREE_GREEDY_HPP
#define STARFREE_GREEDY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "starfree/graph.hpp"

namespace starfree {

/// How the min-degree greedy picks among several minimum-degree vertices.
struct TieBreak {
    enum class Mode { MinIndex, Seeded };
    Mode mode = Mode::MinIndex;
    std::uint64_t seed = 0;

    static TieBreak min_index() { return {Mode::MinIndex, 0}; }
    /// Uniform choice among the tied vertices, driven by std::mt19937_64(seed).
    static TieBreak seeded(std::uint64_t seed) { return {Mode::Seeded, seed}; }
};

struct GreedyPick {
    Vertex vertex;
    std::size_t degree; // degree in the residual graph when picked
    friend bool operator==(const GreedyPick&, const GreedyPick&) = default;
};

struct GreedyTrace {
    std::vector<GreedyPick> picks;
    VertexSet result; // maximal independent set
};

/// Min-degree greedy: repeatedly take a vertex of minimum degree in the residual graph,
/// then delete it together with its neighbours. Degrees always refer to the current
/// residual graph.
GreedyTrace greedy_mis(const Graph& g, TieBreak tie_break = TieBreak::min_index());

/// Smallest maximal independent set the min-degree greedy can return under any
/// tie-breaking, found by exploring every tie with memoisation on the residual vertex
/// set. Requires n <= 64. Returns nothing when more than `state_budget` residual
/// states would be needed.
std::optional<GreedyTrace> greedy_worst_tie_break(const Graph& g, std::size_t state_budget = 1u << 20);

} // namespace starfree

#endif
