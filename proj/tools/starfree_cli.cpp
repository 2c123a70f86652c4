// starfree: command-line front end for the solvers, recognizers and experiments.
//
// Exit codes: 0 success, 1 negative answer (check) or bound violation (experiment),
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "starfree/config.hpp"
#include "starfree/errors.hpp"
#include "starfree/exact.hpp"
#include "starfree/experiment.hpp"
#include "starfree/generators.hpp"
#include "starfree/greedy.hpp"
#include "starfree/io.hpp"
#include "starfree/local_search.hpp"
#include "starfree/recognition.hpp"

using namespace starfree;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::optional<GraphFormat> format_option(const std::string& name) {
    if (name == "auto") return std::nullopt;
    return parse_format(name);
}

VertexSet read_vertex_list(const std::string& path, std::size_t n) {
    std::istringstream in(read_file(path));
    VertexSet s(n);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        for (std::string w; words >> w;) {
            std::size_t used = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(w, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != w.size() || w.empty() || w[0] == '-') throw ParseError(number, "bad vertex '" + w + "'");
            if (v >= n) throw ParseError(number, "vertex " + w + " out of range");
            s.insert(static_cast<Vertex>(v));
        }
    }
    return s;
}

json to_json(const VertexSet& s) { return json(s.members()); }

std::string members_line(const VertexSet& s) {
    std::string out;
    for (auto v : s.members()) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

struct GenOptions {
    std::string kind;
    std::size_t p = 1, r = 3, n = 10, k = 5;
    double prob = 0.3;
    std::uint64_t seed = 1;
    std::string format = "dimacs";
    std::string out;
};

int run_gen(const GenOptions& o) {
    GeneratorKind kind;
    if (o.kind == "star-forest") kind = StarForestSpec{o.p, o.r};
    else if (o.kind == "gnp") kind = GnpSpec{o.n, o.prob};
    else if (o.kind == "star-free") kind = StarFreeSpec{o.n, o.prob, o.r};
    else if (o.kind == "line") kind = std::make_shared<LineGraphSpec>(LineGraphSpec{GnpSpec{o.n, o.prob}});
    else if (o.kind == "fan") kind = FanSpec{o.k};
    else throw std::invalid_argument("unknown generator '" + o.kind + "'");
    SolverLimits limits{64};
    write_output(o.out, write_graph(generate({kind, o.seed}, limits), parse_format(o.format)));
    return kExitOk;
}

struct CheckOptions {
    std::string which;
    std::size_t r = 3;
    std::string file;
    std::string format = "auto";
    std::size_t cap = 40;
};

int run_check(const CheckOptions& o) {
    const auto g = read_graph_file(o.file, format_option(o.format));
    const SolverLimits limits{o.cap};
    if (o.which == "free") {
        const auto res = is_star_free(g, o.r, limits);
        if (res.star_free) {
            std::cout << "K_{1," << o.r << "}-free: yes\n";
            return kExitOk;
        }
        std::cout << "K_{1," << o.r << "}-free: no\ninduced star: center " << res.witness->center << " leaves";
        for (auto v : res.witness->leaves) std::cout << ' ' << v;
        std::cout << '\n';
        return kExitNegative;
    }
    if (o.which == "acf") {
        const auto res = is_almost_star_free(g, o.r, limits);
        if (res.almost_star_free) {
            std::cout << "almost K_{1," << o.r << "}-free: yes\n";
            return kExitOk;
        }
        std::cout << "almost K_{1," << o.r << "}-free: no\nviolation: " << res.violation->to_string() << '\n';
        return kExitNegative;
    }
    throw std::invalid_argument("check expects 'free' or 'acf', got '" + o.which + "'");
}

struct SolveOptions {
    std::string problem = "mis";
    std::string method = "exact";
    std::size_t t = 1;
    std::string init = "default";
    std::string init_file;
    bool trace = false;
    bool jsonl = false;
    std::optional<std::uint64_t> seed;
    std::size_t max_iterations = 100000;
    double work_budget = 1e9;
    std::size_t cap = 40;
    std::string format = "auto";
    std::string file;
};

int run_solve(const SolveOptions& o) {
    const auto g = read_graph_file(o.file, format_option(o.format));
    const auto kind = parse_problem(o.problem);
    json record{{"problem", std::string(to_string(kind))}, {"method", o.method}, {"n", g.order()}, {"m", g.size()}};
    std::ostringstream trace;
    VertexSet witness;

    if (o.method == "exact") {
        const auto res = solve_exact(g, kind, SolverLimits{o.cap});
        witness = res.witness;
        record["explored"] = res.explored;
    } else if (o.method == "greedy") {
        const auto res = greedy_mis(g, o.seed ? TieBreak::seeded(*o.seed) : TieBreak::min_index());
        witness = res.result;
        if (o.trace) {
            json picks = json::array();
            for (const auto& p : res.picks) {
                picks.push_back({{"vertex", p.vertex}, {"degree", p.degree}});
                trace << "pick " << p.vertex << " degree " << p.degree << '\n';
            }
            record["picks"] = picks;
        }
    } else if (o.method == "local") {
        if (neighborhood_work_estimate(g.order(), o.t) > o.work_budget)
            std::cerr << "warning: neighbourhood size n^(2t) = " << neighborhood_work_estimate(g.order(), o.t)
                      << " exceeds the work budget " << o.work_budget << '\n';
        std::optional<VertexSet> start;
        if (o.init == "greedy") start = greedy_mis(g).result;
        else if (o.init == "full") start = g.all_vertices();
        else if (o.init == "file") {
            if (o.init_file.empty()) throw std::invalid_argument("--init file needs --init-file");
            start = read_vertex_list(o.init_file, g.order());
        } else if (o.init != "default") throw std::invalid_argument("unknown --init '" + o.init + "'");
        const auto res = t_local_search(g, kind, start, o.t, o.max_iterations);
        witness = res.final.set();
        record["t"] = o.t;
        record["iterations"] = res.iterations;
        record["certified_local"] = res.certified_local;
        if (o.trace) {
            json steps = json::array();
            for (const auto& imp : res.improvements) {
                steps.push_back({{"l", to_json(imp.l)}, {"before", imp.before}, {"after", imp.after}});
                trace << "improve L = " << imp.l.to_string() << ": " << imp.before << " -> " << imp.after << '\n';
            }
            record["improvements"] = steps;
        }
        if (!res.certified_local) std::cerr << "warning: iteration budget exhausted; result is not certified local\n";
    } else {
        throw std::invalid_argument("unknown method '" + o.method + "' (expected exact, greedy or local)");
    }

    const Solution sol(g, kind, witness, Provenance::loaded());
    record["value"] = sol.value();
    record["witness"] = to_json(sol.set());
    if (o.jsonl) {
        std::cout << record.dump() << '\n';
    } else {
        std::cout << trace.str();
        std::cout << "value " << sol.value() << '\n' << "witness " << members_line(sol.set()) << '\n';
    }
    return kExitOk;
}

struct RatioOptions {
    std::string config;
    std::string csv;
};

int run_ratio(const RatioOptions& o) {
    const auto cfg = parse_experiment_config(read_file(o.config));
    try {
        const auto report = run_ratio_experiment(cfg);
        write_output(o.csv, to_csv(report));
        for (const auto& s : report.skipped) std::cerr << "skipped " << s.graph_id << ": " << s.reason << '\n';
        std::ostream& log = o.csv.empty() || o.csv == "-" ? std::cerr : std::cout;
        log << "problem,r,method,t,rows,max_ratio,mean_ratio\n";
        for (const auto& s : report.summary) {
            char mean[32];
            std::snprintf(mean, sizeof mean, "%.6f", s.mean_ratio);
            log << to_string(s.problem) << ',' << s.r << ',' << s.method.to_string() << ',' << s.method.t << ','
                << s.rows << ',' << s.max_ratio.to_string() << ',' << mean << '\n';
        }
        return kExitOk;
    } catch (const BoundViolation& v) {
        const std::string dump = (o.csv.empty() || o.csv == "-" ? std::string("ratio") : o.csv) + ".violation.dimacs";
        std::ofstream(dump) << "c " << v.what() << '\n' << v.dimacs();
        std::cerr << "bound violation: " << v.what() << "\ninstance written to " << dump << '\n';
        return kExitNegative;
    }
}

struct WorstOptions {
    std::size_t r = 3;
    std::size_t n_max = 14;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::size_t cap = 40;
    std::string csv;
};

int run_worst(const WorstOptions& o) {
    try {
        const auto res = greedy_worst_ratio_search(o.r, o.n_max, o.trials, o.seed, SolverLimits{o.cap});
        if (!o.csv.empty()) write_output(o.csv, to_csv(res));
        std::cout << "observations " << res.observations.size() << '\n'
                  << "best ratio " << res.best.ratio.to_string() << " (alpha " << res.best.alpha << ", alpha' "
                  << res.best.alpha_prime << ", trial " << res.best.trial << ", " << res.best.tie_break << ")\n"
                  << write_graph(res.best_graph, GraphFormat::DIMACS);
        return kExitOk;
    } catch (const BoundViolation& v) {
        std::cerr << "bound violation: " << v.what() << '\n' << v.dimacs();
        return kExitNegative;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Approximation experiments for dominating and independent sets on star-free graphs", "starfree"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("kind", gen.kind, "star-forest | gnp | star-free | line | fan")->required();
    gen_cmd->add_option("--p", gen.p, "Star forest components");
    gen_cmd->add_option("--r", gen.r, "Star parameter r");
    gen_cmd->add_option("--n", gen.n, "Vertices (gnp, star-free; base graph for line)");
    gen_cmd->add_option("--prob", gen.prob, "Edge probability");
    gen_cmd->add_option("--k", gen.k, "Fan path length");
    gen_cmd->add_option("--seed", gen.seed, "Seed");
    gen_cmd->add_option("--format", gen.format, "dimacs | edgelist");
    gen_cmd->add_option("-o,--output", gen.out, "Output file (default stdout)");

    CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Test membership in the K_{1,r}-free or almost K_{1,r}-free class");
    check_cmd->add_option("which", check.which, "free | acf")->required();
    check_cmd->add_option("file", check.file, "Graph file")->required();
    check_cmd->add_option("--r", check.r, "Star parameter r")->required();
    check_cmd->add_option("--format", check.format, "auto | dimacs | edgelist");
    check_cmd->add_option("--cap", check.cap, "Exact solver cap on neighbourhood size");

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve MDS, MIS or MIDS");
    solve_cmd->add_option("file", solve.file, "Graph file")->required();
    solve_cmd->add_option("--problem", solve.problem, "mds | mis | mids")->required();
    solve_cmd->add_option("--method", solve.method, "exact | greedy | local");
    solve_cmd->add_option("--t", solve.t, "Local search radius t");
    solve_cmd->add_option("--init", solve.init, "Local search start: default | greedy | full | file");
    solve_cmd->add_option("--init-file", solve.init_file, "Vertex list for --init file");
    solve_cmd->add_option("--seed", solve.seed, "Seeded greedy tie-breaking");
    solve_cmd->add_option("--max-iterations", solve.max_iterations, "Local search iteration budget");
    solve_cmd->add_option("--work-budget", solve.work_budget, "Warn when n^(2t) exceeds this");
    solve_cmd->add_option("--cap", solve.cap, "Exact solver vertex cap (<= 64)");
    solve_cmd->add_option("--format", solve.format, "auto | dimacs | edgelist");
    solve_cmd->add_flag("--trace", solve.trace, "List greedy picks or local search improvements");
    solve_cmd->add_flag("--jsonl", solve.jsonl, "Print one JSON object instead of text");

    auto* exp_cmd = app.add_subcommand("experiment", "Run experiments");
    exp_cmd->require_subcommand(1);
    RatioOptions ratio;
    auto* ratio_cmd = exp_cmd->add_subcommand("ratio", "Batch approximation-ratio experiment");
    ratio_cmd->add_option("--config", ratio.config, "Experiment config (key = value)")->required();
    ratio_cmd->add_option("--csv", ratio.csv, "CSV output (default stdout)");
    WorstOptions worst;
    auto* worst_cmd = exp_cmd->add_subcommand("greedy-worst", "Search for large alpha/alpha' ratios of greedy");
    worst_cmd->add_option("--r", worst.r, "Star parameter r")->required();
    worst_cmd->add_option("--n-max", worst.n_max, "Largest graph order");
    worst_cmd->add_option("--trials", worst.trials, "Number of random graphs");
    worst_cmd->add_option("--seed", worst.seed, "Seed");
    worst_cmd->add_option("--cap", worst.cap, "Exact solver vertex cap");
    worst_cmd->add_option("--csv", worst.csv, "Write every observation as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*gen_cmd) return run_gen(gen);
        if (*check_cmd) return run_check(check);
        if (*solve_cmd) return run_solve(solve);
        if (*ratio_cmd) return run_ratio(ratio);
        if (*worst_cmd) return run_worst(worst);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
