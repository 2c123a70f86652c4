#include "starfree/graph.hpp"

#include <string>

#include "starfree/errors.hpp"

namespace starfree {

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint out of range for n = " + std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].contains(v)) continue;
        g.rows_[u].insert(v);
        g.rows_[v].insert(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
    if (v >= order())
        throw GraphError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(order()));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    return rows_[u].contains(v);
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    return rows_[v].size();
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& row : rows_) best = std::max(best, row.size());
    return best;
}

const VertexSet& Graph::neighborhood(Vertex v) const {
    check_vertex(v);
    return rows_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
        rows_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

namespace {

void check_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw GraphError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                         std::to_string(g.order()));
}

} // namespace

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    check_universe(g, w);
    InducedSubgraph out;
    out.original = w.members();
    std::vector<std::size_t> local(g.order(), 0);
    for (std::size_t i = 0; i < out.original.size(); ++i) local[out.original[i]] = i;

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        const auto inside = g.neighborhood(out.original[i]) & w;
        inside.for_each([&](Vertex v) {
            if (out.original[i] < v) edges.emplace_back(i, local[v]);
        });
    }
    out.graph = Graph::from_edge_list(out.original.size(), edges);
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    bool ok = true;
    s.for_each([&](Vertex v) {
        if (ok && g.neighborhood(v).intersects(s)) ok = false;
    });
    return ok;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
    check_universe(g, s);
    VertexSet covered = s;
    s.for_each([&](Vertex v) { covered |= g.neighborhood(v); });
    return covered == g.all_vertices();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const std::size_t shift = a.order();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edge_list(a.order() + b.order(), edges);
}

} // namespace starfree
