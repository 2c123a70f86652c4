#ifndef STARFREE_LOCAL_SEARCH_HPP
#define STARFREE_LOCAL_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "starfree/graph.hpp"
#include "starfree/problem.hpp"

namespace starfree {

/// A set L such that S ⊕ L is feasible and strictly better than S.
struct Improvement {
    VertexSet l;
    std::size_t before = 0;
    std::size_t after = 0;
};

/// Finds a t-improvement of the feasible set `s`, i.e. an improvement L with
/// |S ∩ L| <= t - 1 (MIS) or |S ∩ L| <= t (MDS, MIDS).
///
/// Writing L = D ∪ A with D ⊆ S removed and A ⊆ V \ S added, the candidates are
///   min problems: |D| <= t, |A| <= |D| - 1;
///   MIS:          |D| <= t - 1, |A| = |D| + 1, A avoiding N(S \ D).
/// Both neighbourhoods are complete for deciding whether a t-improvement exists (for MIS
/// any improving A contains an improving subset of size |D| + 1 since independence is
/// hereditary). Candidates are visited by |D|, then D, then |A|, then A, all in
/// lexicographic order; the first improvement found is returned.
///
/// Throws InfeasibleSolution if `s` is infeasible and std::invalid_argument if t == 0.
std::optional<Improvement> find_t_improvement(const Graph& g, ProblemKind kind, const VertexSet& s, std::size_t t);

struct LocalSearchOutcome {
    Solution final;
    std::size_t iterations = 0;
    std::vector<Improvement> improvements;
    bool certified_local = false; // false when the iteration budget ran out first
};

/// Starting point when none is supplied: greedy maximal independent set for MIS and
/// MIDS, the full vertex set for MDS.
VertexSet default_initial_solution(const Graph& g, ProblemKind kind);

/// Repeats S := S ⊕ L with L from find_t_improvement until none exists or
/// `max_iterations` improvements were applied.
LocalSearchOutcome t_local_search(const Graph& g, ProblemKind kind, std::optional<VertexSet> initial, std::size_t t,
                                  std::size_t max_iterations);

/// Rough neighbourhood size n^(2t), saturating; the CLI warns above a work budget.
double neighborhood_work_estimate(std::size_t n, std::size_t t);

} // namespace starfree

#endif
