#include "starfree/exact.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "starfree/errors.hpp"

namespace starfree {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t v) { return Mask{1} << v; }
constexpr int lowest(Mask m) { return std::countr_zero(m); }
constexpr int count(Mask m) { return std::popcount(m); }
// Vertices with index >= v.
constexpr Mask from(std::size_t v) { return v >= 64 ? 0 : ~Mask{0} << v; }

void check_cap(const Graph& g, const SolverLimits& limits) {
    if (limits.max_vertices > 64)
        throw std::invalid_argument("solver cap " + std::to_string(limits.max_vertices) + " exceeds 64");
    if (g.order() > limits.max_vertices) throw SolverCapExceeded(g.order(), limits.max_vertices);
}

struct MaskGraph {
    std::size_t n = 0;
    Mask all = 0;
    std::vector<Mask> open;
    std::vector<Mask> closed;

    explicit MaskGraph(const Graph& g) : n(g.order()), open(n, 0), closed(n, 0) {
        all = n == 64 ? ~Mask{0} : bit(n) - 1;
        for (Vertex v = 0; v < n; ++v) {
            g.neighborhood(v).for_each([&](Vertex u) { open[v] |= bit(u); });
            closed[v] = open[v] | bit(v);
        }
    }
};

VertexSet to_set(std::size_t n, Mask m) {
    VertexSet s(n);
    for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(lowest(m)));
    return s;
}

class IndependenceSearch {
public:
    explicit IndependenceSearch(const MaskGraph& g) : g_(g) {}

    int alpha(Mask candidates) {
        int best = 0;
        branch(candidates, 0, best);
        return best;
    }

    std::uint64_t explored() const { return explored_; }

private:
    // Partition into cliques greedily; the number of cliques bounds α from above.
    int clique_cover(Mask rest) const {
        int cliques = 0;
        while (rest != 0) {
            const int v = lowest(rest);
            Mask clique = bit(v);
            Mask open = rest & g_.open[v];
            while (open != 0) {
                const int u = lowest(open);
                clique |= bit(u);
                open &= g_.open[u];
            }
            rest &= ~clique;
            ++cliques;
        }
        return cliques;
    }

    void branch(Mask cand, int size, int& best) {
        ++explored_;
        while (true) {
            if (cand == 0) {
                best = std::max(best, size);
                return;
            }
            // A vertex of degree <= 1 in the candidate graph belongs to some maximum
            // independent set of it.
            int forced = -1;
            int pivot = -1, pivot_deg = -1;
            for (Mask m = cand; m != 0; m &= m - 1) {
                const int v = lowest(m);
                const int d = count(g_.open[v] & cand);
                if (d <= 1) {
                    forced = v;
                    break;
                }
                if (d > pivot_deg) {
                    pivot = v;
                    pivot_deg = d;
                }
            }
            if (forced < 0) {
                if (size + clique_cover(cand) <= best) return;
                branch(cand & ~g_.closed[pivot], size + 1, best);
                branch(cand & ~bit(pivot), size, best);
                return;
            }
            cand &= ~g_.closed[forced];
            ++size;
        }
    }

    const MaskGraph& g_;
    std::uint64_t explored_ = 0;
};

// Walks combinations of exactly `picks` vertices in lexicographic order and stops at
// the first dominating one. With `independent` set, only independent combinations are
// followed.
class DominationSearch {
public:
    DominationSearch(const MaskGraph& g, bool independent) : g_(g), independent_(independent) {
        for (Mask c : g_.closed) max_closed_ = std::max(max_closed_, count(c));
    }

    bool find(int picks, Mask& witness) {
        witness = 0;
        return dfs(0, picks, 0, witness);
    }

    std::uint64_t explored() const { return explored_; }

private:
    bool dfs(std::size_t start, int picks, Mask dominated, Mask& chosen) {
        ++explored_;
        if (dominated == g_.all) return true;
        if (picks == 0) return false;
        const Mask undominated = g_.all & ~dominated;
        if (count(undominated) > picks * max_closed_) return false;
        // Vertices still allowed to join; for independent search a dominated vertex is
        // either chosen or adjacent to a chosen one.
        const Mask available = (independent_ ? ~dominated : ~Mask{0}) & g_.all & from(start);
        for (Mask m = undominated; m != 0; m &= m - 1)
            if ((g_.closed[lowest(m)] & available) == 0) return false;

        for (Mask m = available; m != 0; m &= m - 1) {
            const int v = lowest(m);
            chosen |= bit(v);
            if (dfs(static_cast<std::size_t>(v) + 1, picks - 1, dominated | g_.closed[v], chosen)) return true;
            chosen &= ~bit(v);
        }
        return false;
    }

    const MaskGraph& g_;
    bool independent_;
    int max_closed_ = 1;
    std::uint64_t explored_ = 0;
};

ExactResult domination(const Graph& g, const SolverLimits& limits, bool independent) {
    check_cap(g, limits);
    const MaskGraph mg(g);
    DominationSearch search(mg, independent);
    const int per_vertex = static_cast<int>(g.max_degree()) + 1;
    int k = static_cast<int>((g.order() + per_vertex - 1) / per_vertex);
    Mask witness = 0;
    while (!search.find(k, witness)) ++k;
    return ExactResult{independent ? ProblemKind::MIDS : ProblemKind::MDS, static_cast<std::size_t>(count(witness)),
                       to_set(g.order(), witness), search.explored()};
}

} // namespace

ExactResult max_independent_set(const Graph& g, const SolverLimits& limits) {
    check_cap(g, limits);
    const MaskGraph mg(g);
    IndependenceSearch search(mg);
    const int alpha = search.alpha(mg.all);

    // Fix vertices in increasing order, keeping v whenever an optimum through the
    // current prefix and v still exists. This yields the lexicographically smallest
    // maximum independent set.
    Mask chosen = 0;
    Mask pool = mg.all;
    int need = alpha;
    for (std::size_t v = 0; v < mg.n && need > 0; ++v) {
        if (!(pool & bit(v))) continue;
        const Mask rest = pool & ~mg.closed[v] & from(v + 1);
        if (1 + search.alpha(rest) == need) {
            chosen |= bit(v);
            pool = rest;
            --need;
        } else {
            pool &= ~bit(v);
        }
    }
    return ExactResult{ProblemKind::MIS, static_cast<std::size_t>(alpha), to_set(g.order(), chosen),
                       search.explored()};
}

ExactResult min_dominating_set(const Graph& g, const SolverLimits& limits) { return domination(g, limits, false); }

ExactResult min_independent_dominating_set(const Graph& g, const SolverLimits& limits) {
    return domination(g, limits, true);
}

ExactResult solve_exact(const Graph& g, ProblemKind kind, const SolverLimits& limits) {
    switch (kind) {
    case ProblemKind::MDS: return min_dominating_set(g, limits);
    case ProblemKind::MIS: return max_independent_set(g, limits);
    case ProblemKind::MIDS: return min_independent_dominating_set(g, limits);
    }
    throw std::invalid_argument("unknown problem kind");
}

} // namespace starfree
