#ifndef STARFREE_GRAPH_HPP
#define STARFREE_GRAPH_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "starfree/vertex_set.hpp"

namespace starfree {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Each vertex keeps its open
/// neighbourhood as a bit row, so adjacency and neighbourhood queries are O(1).
/// Immutable after construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Duplicate edges (in either orientation) collapse to one. Throws GraphError on
    /// self-loops and out-of-range endpoints.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
    static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const { return rows_.size(); }
    std::size_t size() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const;

    /// Open neighbourhood N(v).
    const VertexSet& neighborhood(Vertex v) const;

    /// Edges (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    VertexSet empty_set() const { return VertexSet(order()); }
    VertexSet all_vertices() const { return VertexSet::full(order()); }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> rows_;
    std::size_t m_ = 0;
};

/// Result of restricting a graph to a vertex subset. `original[i]` is the label in the
/// source graph of vertex i; labels keep their relative order.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace starfree

#endif
