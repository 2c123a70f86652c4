#ifndef STARFREE_CONFIG_HPP
#define STARFREE_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starfree/exact.hpp"
#include "starfree/generators.hpp"
#include "starfree/problem.hpp"

namespace starfree {

struct Method {
    enum class Kind { Greedy, Local };
    Kind kind = Kind::Greedy;
    std::size_t t = 0;

    static Method greedy() { return {Kind::Greedy, 0}; }
    static Method local(std::size_t t) { return {Kind::Local, t}; }

    std::string to_string() const; // "greedy" | "local"
    friend bool operator==(const Method&, const Method&) = default;
    friend auto operator<=>(const Method&, const Method&) = default;
};

/// One `instance =` line: a generator run `count` times with seeds seed, seed+1, ...,
/// or a graph file. `r_values` overrides the experiment-wide list.
struct InstanceSource {
    std::optional<GeneratorKind> generator;
    std::string path;
    std::size_t count = 1;
    std::optional<std::uint64_t> seed;
    std::vector<std::size_t> r_values;
};

struct ExperimentConfig {
    std::vector<InstanceSource> instances;
    std::vector<std::size_t> r_values{3};
    std::vector<ProblemKind> problems;
    std::vector<Method> methods;
    SolverLimits limits;
    std::uint64_t seed = 1;
    std::size_t max_iterations = 10000;

    /// Throws std::invalid_argument unless there is at least one instance, problem and
    /// method, and every r is >= 3.
    void validate() const;
};

/// Parses the key = value experiment format:
///
///   # comment
///   seed = 1
///   cap = 40
///   r = 3, 4
///   problems = mis, mds, mids
///   methods = greedy, local:1, local:2
///   max_iterations = 10000
///   instance = star_forest p=3 r=4
///   instance = star_free n=12 prob=0.3 r=3 count=50 seed=1
///   instance = gnp n=10 prob=0.4 count=20
///   instance = line n=6 prob=0.5 count=10      (line graph of gnp)
///   instance = fan k=5 r=3
///   instance = file path=graphs/g.dimacs
///
/// Generators with an intrinsic r (star_forest, star_free) are classified at that r.
/// Errors are reported as ParseError with the offending line.
ExperimentConfig parse_experiment_config(std::string_view text);

} // namespace starfree

#endif
