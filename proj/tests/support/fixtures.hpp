#ifndef STARFREE_TESTS_FIXTURES_HPP
#define STARFREE_TESTS_FIXTURES_HPP

#include <vector>

#include "starfree/graph.hpp"

namespace fixtures {

using starfree::Edge;
using starfree::Graph;

inline Graph edgeless(std::size_t n) { return Graph(n); }

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

/// K_{1,k}, centre 0.
inline Graph star(std::size_t k) {
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= k; ++i) e.emplace_back(0, i);
    return Graph::from_edge_list(k + 1, e);
}

/// Graph number `code` on n vertices: bit i of `code` decides the i-th pair in
/// lexicographic order. Enumerates every labelled graph as code runs over [0, 2^(n(n-1)/2)).
inline Graph from_code(std::size_t n, std::uint64_t code) {
    std::vector<Edge> e;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
            if ((code >> bit) & 1u) e.emplace_back(i, j);
    return Graph::from_edge_list(n, e);
}

} // namespace fixtures

#endif
