#ifndef STARFREE_ERRORS_HPP
#define STARFREE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starfree {

/// Malformed graph construction: endpoint out of range, self-loop, mismatched universes.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Raised when an exact solver is asked to work on a graph above its configured size cap.
class SolverCapExceeded : public std::runtime_error {
public:
    SolverCapExceeded(std::size_t n, std::size_t cap)
        : std::runtime_error("graph with " + std::to_string(n) + " vertices exceeds solver cap " +
                             std::to_string(cap)),
          n_(n), cap_(cap) {}

    std::size_t vertices() const { return n_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

class InfeasibleSolution : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace starfree

#endif
