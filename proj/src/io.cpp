#include "starfree/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "starfree/errors.hpp"

namespace starfree {

namespace {

struct Line {
    std::size_t number;
    std::string text;
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<Line> meaningful_lines(std::string_view text, bool dimacs) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty()) continue;
        if (!dimacs && line[0] == '#') continue;
        if (dimacs && line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t')) continue;
        out.push_back({number, std::move(line)});
    }
    return out;
}

// Reads exactly `count` unsigned integers and nothing else from the stream.
std::vector<long long> read_numbers(std::istringstream& in, std::size_t count, const Line& line) {
    std::vector<long long> values(count);
    for (auto& v : values)
        if (!(in >> v)) throw ParseError(line.number, "expected " + std::to_string(count) + " integers: '" + line.text + "'");
    std::string rest;
    if (in >> rest) throw ParseError(line.number, "trailing tokens: '" + line.text + "'");
    return values;
}

Graph build(std::size_t n, std::size_t m, const std::vector<Edge>& edges, std::size_t header_line) {
    if (edges.size() != m)
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges but " +
                                          std::to_string(edges.size()) + " were given");
    return Graph::from_edge_list(n, edges);
}

Edge checked_edge(long long u, long long v, std::size_t n, long long base, const Line& line,
                  std::set<Edge>& seen) {
    const long long lo = base;
    const long long hi = static_cast<long long>(n) - 1 + base;
    if (u < lo || u > hi || v < lo || v > hi)
        throw ParseError(line.number, "endpoint out of range: '" + line.text + "'");
    if (u == v) throw ParseError(line.number, "self-loop: '" + line.text + "'");
    Edge e{static_cast<Vertex>(std::min(u, v) - base), static_cast<Vertex>(std::max(u, v) - base)};
    if (!seen.insert(e).second) throw ParseError(line.number, "duplicate edge: '" + line.text + "'");
    return e;
}

Graph parse_dimacs(std::string_view text) {
    const auto lines = meaningful_lines(text, true);
    if (lines.empty()) throw ParseError(1, "missing 'p edge' header");
    std::size_t n = 0, m = 0;
    {
        std::istringstream in(lines[0].text);
        std::string p, kind;
        in >> p >> kind;
        if (p != "p" || kind != "edge") throw ParseError(lines[0].number, "expected 'p edge <n> <m>'");
        auto nums = read_numbers(in, 2, lines[0]);
        if (nums[0] < 0 || nums[1] < 0) throw ParseError(lines[0].number, "negative count in header");
        n = static_cast<std::size_t>(nums[0]);
        m = static_cast<std::size_t>(nums[1]);
    }
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i].text);
        std::string tag;
        in >> tag;
        if (tag != "e") throw ParseError(lines[i].number, "expected 'e <u> <v>': '" + lines[i].text + "'");
        auto nums = read_numbers(in, 2, lines[i]);
        edges.push_back(checked_edge(nums[0], nums[1], n, 1, lines[i], seen));
    }
    return build(n, m, edges, lines[0].number);
}

Graph parse_edge_list(std::string_view text) {
    const auto lines = meaningful_lines(text, false);
    if (lines.empty()) throw ParseError(1, "missing '<n> <m>' header");
    std::size_t n = 0, m = 0;
    {
        std::istringstream in(lines[0].text);
        auto nums = read_numbers(in, 2, lines[0]);
        if (nums[0] < 0 || nums[1] < 0) throw ParseError(lines[0].number, "negative count in header");
        n = static_cast<std::size_t>(nums[0]);
        m = static_cast<std::size_t>(nums[1]);
    }
    std::set<Edge> seen;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i].text);
        auto nums = read_numbers(in, 2, lines[i]);
        edges.push_back(checked_edge(nums[0], nums[1], n, 0, lines[i], seen));
    }
    return build(n, m, edges, lines[0].number);
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::DIMACS ? parse_dimacs(text) : parse_edge_list(text);
}

std::string write_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::DIMACS) {
        out << "p edge " << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        out << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    }
    return out.str();
}

GraphFormat detect_format(std::string_view text) {
    for (const auto& line : meaningful_lines(text, false))
        return (line.text[0] == 'p' || line.text[0] == 'c') ? GraphFormat::DIMACS : GraphFormat::EdgeList;
    return GraphFormat::EdgeList;
}

GraphFormat parse_format(std::string_view name) {
    if (name == "dimacs") return GraphFormat::DIMACS;
    if (name == "edgelist") return GraphFormat::EdgeList;
    throw std::invalid_argument("unknown graph format '" + std::string(name) + "' (expected dimacs or edgelist)");
}

Graph read_graph_file(const std::string& path, std::optional<GraphFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const auto text = buffer.str();
    return parse_graph(text, format.value_or(detect_format(text)));
}

} // namespace starfree
