#ifndef STARFREE_PROBLEM_HPP
#define STARFREE_PROBLEM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "starfree/graph.hpp"

namespace starfree {

/// The three cardinality problems. Objective is always |S|.
enum class ProblemKind { MDS, MIS, MIDS };

enum class Sense { Min, Max };

constexpr Sense sense(ProblemKind kind) { return kind == ProblemKind::MIS ? Sense::Max : Sense::Min; }

/// "mds", "mis", "mids"
std::string_view to_string(ProblemKind kind);
/// Case-insensitive; throws std::invalid_argument on anything else.
ProblemKind parse_problem(std::string_view text);

bool is_feasible(const Graph& g, ProblemKind kind, const VertexSet& s);

struct Provenance {
    enum class Kind { Exact, Greedy, LocalSearch, Loaded };
    Kind kind = Kind::Loaded;
    std::size_t t = 0; // only meaningful for LocalSearch

    static Provenance exact() { return {Kind::Exact, 0}; }
    static Provenance greedy() { return {Kind::Greedy, 0}; }
    static Provenance local_search(std::size_t t) { return {Kind::LocalSearch, t}; }
    static Provenance loaded() { return {Kind::Loaded, 0}; }

    std::string to_string() const;
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// A feasible set for a problem on a particular graph. Construction checks feasibility
/// and throws InfeasibleSolution otherwise.
class Solution {
public:
    Solution(const Graph& g, ProblemKind problem, VertexSet set, Provenance provenance);

    ProblemKind problem() const { return problem_; }
    const VertexSet& set() const { return set_; }
    std::size_t value() const { return set_.size(); }
    const Provenance& provenance() const { return provenance_; }

private:
    ProblemKind problem_;
    VertexSet set_;
    Provenance provenance_;
};

/// Exact non-negative rational in lowest terms.
struct Ratio {
    std::uint64_t num = 1;
    std::uint64_t den = 1;

    static Ratio make(std::uint64_t num, std::uint64_t den);

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const; // "9/5" or "1"

    /// Compares against an integer bound without rounding.
    bool at_most(std::uint64_t bound) const { return num <= bound * den; }

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
};

/// opt/achieved for maximisation, achieved/opt for minimisation. Both zero (empty
/// graph) gives 1. Throws std::invalid_argument when exactly one side is zero.
Ratio approximation_ratio(ProblemKind kind, std::uint64_t opt, std::uint64_t achieved);

} // namespace starfree

#endif
