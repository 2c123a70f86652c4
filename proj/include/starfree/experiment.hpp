#ifndef STARFREE_EXPERIMENT_HPP
#define STARFREE_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starfree/config.hpp"
#include "starfree/exact.hpp"
#include "starfree/graph.hpp"
#include "starfree/problem.hpp"

namespace starfree {

inline constexpr int kRatioCsvSchema = 1;
inline constexpr int kWorstRatioCsvSchema = 1;

/// A proven ratio bound failed. Carries the offending graph in DIMACS form so the
/// instance can be replayed.
class BoundViolation : public std::runtime_error {
public:
    BoundViolation(const std::string& what, std::string graph_id, std::string dimacs)
        : std::runtime_error(what), graph_id_(std::move(graph_id)), dimacs_(std::move(dimacs)) {}

    const std::string& graph_id() const { return graph_id_; }
    const std::string& dimacs() const { return dimacs_; }

private:
    std::string graph_id_;
    std::string dimacs_;
};

struct RatioRow {
    std::string graph_id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t r = 0;
    bool star_free = false;
    bool acf = false;
    ProblemKind problem = ProblemKind::MIS;
    Method method;
    std::size_t opt = 0;
    std::size_t value = 0;
    Ratio ratio;
};

struct RatioSummary {
    ProblemKind problem;
    std::size_t r;
    Method method;
    Ratio max_ratio;
    double mean_ratio = 0.0;
    std::size_t rows = 0;
};

struct SkippedInstance {
    std::string graph_id;
    std::string reason;
};

struct RatioReport {
    std::vector<RatioRow> rows;
    std::vector<RatioSummary> summary; // ordered by (problem, r, method)
    std::vector<SkippedInstance> skipped;
};

/// Classifies, solves exactly and runs every method on each configured instance, in
/// configuration order. Any independent dominating heuristic solution whose ratio
/// exceeds r - 1 on a K_{1,r}-free instance, or (r - 1)^2 on an almost K_{1,r}-free one,
/// raises BoundViolation. Instances above the solver cap are skipped; if nothing
/// survives, std::runtime_error is thrown.
RatioReport run_ratio_experiment(const ExperimentConfig& config);

/// header `schema,graph_id,n,m,r,star_free,acf,problem,method,t,opt,value,ratio_num,ratio_den,ratio`
std::string to_csv(const RatioReport& report);

struct InequalityCheck {
    std::string name;
    bool holds = false;
};

/// Exact α, γ, γ₀ plus the size α′ of a maximal independent set, with the inequalities
/// γ <= α <= (r-1)γ and α′/(r-1) <= γ <= γ₀ <= α′ <= α <= (r-1)α′ evaluated in integer
/// arithmetic. They are only claimed when `star_free` is true.
struct InequalityRecord {
    std::size_t r = 0;
    bool star_free = false;
    std::size_t alpha = 0;
    std::size_t gamma = 0;
    std::size_t gamma0 = 0;
    std::size_t alpha_prime = 0;
    std::vector<InequalityCheck> checks;

    bool all_hold() const;
};

/// α′ comes from `maximal_set` when given (must be a maximal independent set, otherwise
/// std::invalid_argument), else from greedy_mis with MinIndex tie-breaking.
InequalityRecord verify_inequalities(const Graph& g, std::size_t r, const SolverLimits& limits = {},
                                     const std::optional<VertexSet>& maximal_set = std::nullopt);

struct WorstRatioObservation {
    std::size_t trial = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t graph_seed = 0;
    double prob = 0.0;
    std::string tie_break; // "min_index", "seeded:<seed>" or "adversarial"
    std::size_t alpha = 0;
    std::size_t alpha_prime = 0;
    Ratio ratio;
};

struct WorstRatioResult {
    std::size_t r = 0;
    Graph best_graph;
    WorstRatioObservation best;
    std::vector<WorstRatioObservation> observations;
};

/// Random K_{1,r}-free graphs with n in [r + 1, n_max] and edge probability in
/// [0.05, 0.65]; each is run through greedy with MinIndex, four seeded tie-breaks and
/// the adversarial tie exploration. Reports the largest α/α′ seen. A ratio above r - 1
/// raises BoundViolation. Requires r >= 3 and n_max within the solver cap.
WorstRatioResult greedy_worst_ratio_search(std::size_t r, std::size_t n_max, std::size_t trials, std::uint64_t seed,
                                           const SolverLimits& limits = {});

/// header `schema,trial,n,m,r,graph_seed,prob,tie_break,alpha,alpha_prime,ratio_num,ratio_den,ratio`
std::string to_csv(const WorstRatioResult& result);

} // namespace starfree

#endif
