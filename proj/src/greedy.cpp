#include "starfree/greedy.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace starfree {

GreedyTrace greedy_mis(const Graph& g, TieBreak tie_break) {
    const std::size_t n = g.order();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

    std::mt19937_64 rng(tie_break.seed);
    GreedyTrace trace{{}, VertexSet(n)};
    std::size_t remaining = n;
    std::vector<Vertex> tied;

    auto remove = [&](Vertex v) {
        alive[v] = false;
        --remaining;
        g.neighborhood(v).for_each([&](Vertex u) {
            if (alive[u]) --degree[u];
        });
    };

    while (remaining > 0) {
        tied.clear();
        std::size_t best = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (degree[v] < best) {
                best = degree[v];
                tied.clear();
            }
            if (degree[v] == best) tied.push_back(v);
        }
        Vertex pick = tied.front();
        if (tie_break.mode == TieBreak::Mode::Seeded && tied.size() > 1) pick = tied[rng() % tied.size()];

        trace.picks.push_back({pick, best});
        trace.result.insert(pick);
        const auto doomed = g.neighborhood(pick).members();
        remove(pick);
        for (Vertex u : doomed)
            if (alive[u]) remove(u);
    }
    return trace;
}

namespace {

using Mask = std::uint64_t;

class TieExplorer {
public:
    TieExplorer(const Graph& g, std::size_t budget) : budget_(budget), closed_(g.order()), open_(g.order()) {
        for (Vertex v = 0; v < g.order(); ++v) {
            g.neighborhood(v).for_each([&](Vertex u) { open_[v] |= Mask{1} << u; });
            closed_[v] = open_[v] | Mask{1} << v;
        }
    }

    // Size of the smallest result reachable from `residual`; -1 once over budget.
    int smallest(Mask residual) {
        if (residual == 0) return 0;
        if (auto it = memo_.find(residual); it != memo_.end()) return it->second.size;
        if (memo_.size() >= budget_) return -1;

        int min_deg = 65;
        for (Mask m = residual; m != 0; m &= m - 1)
            min_deg = std::min(min_deg, std::popcount(open_[std::countr_zero(m)] & residual));

        Entry entry{65, 0};
        for (Mask m = residual; m != 0; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (std::popcount(open_[v] & residual) != min_deg) continue;
            const int sub = smallest(residual & ~closed_[v]);
            if (sub < 0) return -1;
            if (sub + 1 < entry.size) entry = {sub + 1, v};
        }
        memo_.emplace(residual, entry);
        return entry.size;
    }

    GreedyTrace replay(std::size_t n, Mask residual) const {
        GreedyTrace trace{{}, VertexSet(n)};
        while (residual != 0) {
            const auto& entry = memo_.at(residual);
            trace.picks.push_back({static_cast<Vertex>(entry.pick),
                                   static_cast<std::size_t>(std::popcount(open_[entry.pick] & residual))});
            trace.result.insert(static_cast<Vertex>(entry.pick));
            residual &= ~closed_[entry.pick];
        }
        return trace;
    }

private:
    struct Entry {
        int size;
        int pick;
    };

    std::size_t budget_;
    std::vector<Mask> closed_;
    std::vector<Mask> open_;
    std::unordered_map<Mask, Entry> memo_;
};

} // namespace

std::optional<GreedyTrace> greedy_worst_tie_break(const Graph& g, std::size_t state_budget) {
    if (g.order() > 64) throw std::invalid_argument("greedy_worst_tie_break supports at most 64 vertices");
    const Mask all = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
    TieExplorer explorer(g, state_budget);
    if (explorer.smallest(all) < 0) return std::nullopt;
    return explorer.replay(g.order(), all);
}

} // namespace starfree
