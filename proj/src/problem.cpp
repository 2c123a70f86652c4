#include "starfree/problem.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "starfree/errors.hpp"

namespace starfree {

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::MDS: return "mds";
    case ProblemKind::MIS: return "mis";
    case ProblemKind::MIDS: return "mids";
    }
    return "?";
}

ProblemKind parse_problem(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "mds") return ProblemKind::MDS;
    if (lower == "mis") return ProblemKind::MIS;
    if (lower == "mids") return ProblemKind::MIDS;
    throw std::invalid_argument("unknown problem '" + std::string(text) + "' (expected mds, mis or mids)");
}

bool is_feasible(const Graph& g, ProblemKind kind, const VertexSet& s) {
    switch (kind) {
    case ProblemKind::MDS: return is_dominating(g, s);
    case ProblemKind::MIS: return is_independent(g, s);
    case ProblemKind::MIDS: return is_independent(g, s) && is_dominating(g, s);
    }
    return false;
}

std::string Provenance::to_string() const {
    switch (kind) {
    case Kind::Exact: return "exact";
    case Kind::Greedy: return "greedy";
    case Kind::LocalSearch: return "local:" + std::to_string(t);
    case Kind::Loaded: return "loaded";
    }
    return "?";
}

Solution::Solution(const Graph& g, ProblemKind problem, VertexSet set, Provenance provenance)
    : problem_(problem), set_(std::move(set)), provenance_(provenance) {
    if (!is_feasible(g, problem_, set_))
        throw InfeasibleSolution(set_.to_string() + " is not feasible for " + std::string(starfree::to_string(problem_)));
}

Ratio Ratio::make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("ratio with zero denominator");
    const auto g = std::gcd(num, den);
    return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::string Ratio::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Ratio approximation_ratio(ProblemKind kind, std::uint64_t opt, std::uint64_t achieved) {
    if (opt == 0 && achieved == 0) return Ratio{1, 1};
    if (opt == 0 || achieved == 0)
        throw std::invalid_argument("approximation ratio undefined for opt = " + std::to_string(opt) +
                                    ", achieved = " + std::to_string(achieved));
    return sense(kind) == Sense::Max ? Ratio::make(opt, achieved) : Ratio::make(achieved, opt);
}

} // namespace starfree
