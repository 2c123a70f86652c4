#include "starfree/generators.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "starfree/recognition.hpp"

namespace starfree {

namespace {

void check_probability(double prob) {
    if (!(prob >= 0.0 && prob <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

Graph star_forest(std::size_t p, std::size_t r) {
    if (p < 1) throw std::invalid_argument("star_forest needs p >= 1");
    if (r < 3) throw std::invalid_argument("star_forest needs r >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t leaf = 1; leaf < r; ++leaf) edges.emplace_back(i * r, i * r + leaf);
    return Graph::from_edge_list(p * r, edges);
}

Graph line_graph(const Graph& g) {
    const auto base = g.edges();
    std::vector<std::vector<std::size_t>> incident(g.order());
    for (std::size_t i = 0; i < base.size(); ++i) {
        incident[base[i].first].push_back(i);
        incident[base[i].second].push_back(i);
    }
    std::vector<Edge> edges;
    for (const auto& at : incident)
        for (std::size_t a = 0; a < at.size(); ++a)
            for (std::size_t b = a + 1; b < at.size(); ++b) edges.emplace_back(at[a], at[b]);
    // Two distinct simple edges share at most one endpoint, so no pair repeats.
    return Graph::from_edge_list(base.size(), edges);
}

Graph fan(std::size_t k) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= k; ++i) {
        edges.emplace_back(0, i);
        if (i + 1 <= k) edges.emplace_back(i, i + 1);
    }
    return Graph::from_edge_list(k + 1, edges);
}

Graph random_gnp(std::size_t n, double prob, std::uint64_t seed) {
    check_probability(prob);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit_interval(rng) < prob) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph random_star_free(std::size_t n, double prob, std::size_t r, std::uint64_t seed, const SolverLimits& limits) {
    if (r < 3) throw std::invalid_argument("random_star_free needs r >= 3");
    Graph g = random_gnp(n, prob, seed);
    while (true) {
        const auto check = is_star_free(g, r, limits);
        if (check.star_free) return g;
        // Witness leaves are sorted and pairwise non-adjacent, so the first two give the
        // lexicographically smallest missing leaf-leaf edge.
        auto edges = g.edges();
        edges.emplace_back(check.witness->leaves[0], check.witness->leaves[1]);
        g = Graph::from_edge_list(n, edges);
    }
}

Graph generate(const GeneratorSpec& spec, const SolverLimits& limits) {
    return std::visit(overloaded{
                          [&](const StarForestSpec& s) { return star_forest(s.p, s.r); },
                          [&](const GnpSpec& s) { return random_gnp(s.n, s.prob, spec.seed); },
                          [&](const StarFreeSpec& s) { return random_star_free(s.n, s.prob, s.r, spec.seed, limits); },
                          [&](const FanSpec& s) { return fan(s.k); },
                          [&](const std::shared_ptr<LineGraphSpec>& s) {
                              if (!s) throw std::invalid_argument("line graph spec without inner generator");
                              return line_graph(generate(GeneratorSpec{s->inner, spec.seed}, limits));
                          },
                      },
                      spec.kind);
}

std::string describe(const GeneratorKind& kind) {
    std::ostringstream out;
    std::visit(overloaded{
                   [&](const StarForestSpec& s) { out << "star_forest(p=" << s.p << ";r=" << s.r << ")"; },
                   [&](const GnpSpec& s) { out << "gnp(n=" << s.n << ";prob=" << s.prob << ")"; },
                   [&](const StarFreeSpec& s) {
                       out << "star_free(n=" << s.n << ";prob=" << s.prob << ";r=" << s.r << ")";
                   },
                   [&](const FanSpec& s) { out << "fan(k=" << s.k << ")"; },
                   [&](const std::shared_ptr<LineGraphSpec>& s) {
                       out << "line(" << (s ? describe(s->inner) : std::string("?")) << ")";
                   },
               },
               kind);
    return out.str();
}

} // namespace starfree
