#ifndef STARFREE_IO_HPP
#define STARFREE_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "starfree/graph.hpp"

namespace starfree {

// DIMACS:    "p edge <n> <m>" then m lines "e <u> <v>", 1-based; "c" lines are comments.
// EdgeList:  "<n> <m>" then m lines "<u> <v>", 0-based; blank lines and '#' comments skipped.
// Both formats reject duplicate edges, self-loops, out-of-range endpoints and a
// header edge count that disagrees with the number of edge lines.
enum class GraphFormat { DIMACS, EdgeList };

Graph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

/// DIMACS if the first meaningful line starts with 'p' or 'c', EdgeList otherwise.
GraphFormat detect_format(std::string_view text);

GraphFormat parse_format(std::string_view name); // "dimacs" | "edgelist"

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt);

} // namespace starfree

#endif
