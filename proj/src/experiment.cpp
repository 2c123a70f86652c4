#include "starfree/experiment.hpp"

#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "starfree/errors.hpp"
#include "starfree/greedy.hpp"
#include "starfree/io.hpp"
#include "starfree/local_search.hpp"
#include "starfree/recognition.hpp"

namespace starfree {

namespace {

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::string sanitize(std::string s) {
    for (auto& c : s)
        if (c == ',' || c == '\n' || c == '\r' || c == '"') c = '_';
    return s;
}

struct Instance {
    std::string id;
    std::vector<std::size_t> r_values;
    std::function<Graph()> build;
};

std::vector<Instance> expand(const ExperimentConfig& config) {
    std::vector<Instance> out;
    for (std::size_t i = 0; i < config.instances.size(); ++i) {
        const auto& src = config.instances[i];
        const auto& rs = src.r_values.empty() ? config.r_values : src.r_values;
        if (!src.generator) {
            out.push_back({std::to_string(i) + ":file:" + sanitize(src.path), rs,
                           [path = src.path] { return read_graph_file(path); }});
            continue;
        }
        const auto base = src.seed.value_or(config.seed);
        for (std::size_t j = 0; j < src.count; ++j) {
            GeneratorSpec spec{*src.generator, base + j};
            out.push_back({std::to_string(i) + ":" + describe(spec.kind) + ":s" + std::to_string(spec.seed), rs,
                           [spec, limits = config.limits] { return generate(spec, limits); }});
        }
    }
    return out;
}

std::uint64_t square(std::uint64_t x) { return x * x; }

} // namespace

RatioReport run_ratio_experiment(const ExperimentConfig& config) {
    config.validate();
    RatioReport report;

    for (const auto& inst : expand(config)) {
        Graph g;
        try {
            g = inst.build();
        } catch (const SolverCapExceeded& e) {
            report.skipped.push_back({inst.id, e.what()});
            continue;
        }
        if (g.order() > config.limits.max_vertices) {
            report.skipped.push_back({inst.id, SolverCapExceeded(g.order(), config.limits.max_vertices).what()});
            continue;
        }

        std::map<ProblemKind, std::size_t> optimum;
        for (auto kind : config.problems) optimum[kind] = solve_exact(g, kind, config.limits).optimum;

        const auto greedy = greedy_mis(g).result;
        std::map<std::pair<ProblemKind, std::size_t>, VertexSet> local;
        for (auto kind : config.problems)
            for (const auto& method : config.methods)
                if (method.kind == Method::Kind::Local && !local.count({kind, method.t}))
                    local.emplace(std::pair{kind, method.t},
                                  t_local_search(g, kind, std::nullopt, method.t, config.max_iterations).final.set());

        for (auto r : inst.r_values) {
            const bool star_free = is_star_free(g, r, config.limits).star_free;
            const bool acf = is_almost_star_free(g, r, config.limits).almost_star_free;
            for (auto kind : config.problems) {
                for (const auto& method : config.methods) {
                    const auto& set = method.kind == Method::Kind::Greedy ? greedy : local.at({kind, method.t});
                    RatioRow row{inst.id,   g.order(), g.size(),      r,           star_free, acf, kind, method,
                                 optimum[kind], set.size(), approximation_ratio(kind, optimum[kind], set.size())};

                    const bool maximal_independent = is_independent(g, set) && is_dominating(g, set);
                    const std::uint64_t bound = star_free ? r - 1 : square(r - 1);
                    if (maximal_independent && (star_free || acf) && !row.ratio.at_most(bound)) {
                        std::ostringstream msg;
                        msg << "ratio " << row.ratio.to_string() << " exceeds " << bound << " for "
                            << to_string(kind) << " with " << method.to_string() << " on " << inst.id
                            << " (r = " << r << ", " << (star_free ? "star-free" : "almost star-free") << ")";
                        throw BoundViolation(msg.str(), inst.id, write_graph(g, GraphFormat::DIMACS));
                    }
                    report.rows.push_back(std::move(row));
                }
            }
        }
    }

    if (report.rows.empty()) throw std::runtime_error("every experiment instance was skipped");

    struct Accum {
        Ratio max{1, 1};
        double sum = 0.0;
        std::size_t rows = 0;
    };
    std::map<std::tuple<ProblemKind, std::size_t, Method>, Accum> groups;
    for (const auto& row : report.rows) {
        auto& acc = groups[{row.problem, row.r, row.method}];
        if (acc.max < row.ratio) acc.max = row.ratio;
        acc.sum += row.ratio.to_double();
        ++acc.rows;
    }
    for (const auto& [key, acc] : groups) {
        const auto& [problem, r, method] = key;
        report.summary.push_back({problem, r, method, acc.max, acc.sum / static_cast<double>(acc.rows), acc.rows});
    }
    return report;
}

std::string to_csv(const RatioReport& report) {
    std::ostringstream out;
    out << "schema,graph_id,n,m,r,star_free,acf,problem,method,t,opt,value,ratio_num,ratio_den,ratio\n";
    for (const auto& row : report.rows) {
        out << kRatioCsvSchema << ',' << row.graph_id << ',' << row.n << ',' << row.m << ',' << row.r << ','
            << (row.star_free ? 1 : 0) << ',' << (row.acf ? 1 : 0) << ',' << to_string(row.problem) << ','
            << row.method.to_string() << ',' << row.method.t << ',' << row.opt << ',' << row.value << ','
            << row.ratio.num << ',' << row.ratio.den << ',' << decimal(row.ratio.to_double()) << '\n';
    }
    return out.str();
}

bool InequalityRecord::all_hold() const {
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

InequalityRecord verify_inequalities(const Graph& g, std::size_t r, const SolverLimits& limits,
                                     const std::optional<VertexSet>& maximal_set) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (maximal_set && !(is_independent(g, *maximal_set) && is_dominating(g, *maximal_set)))
        throw std::invalid_argument(maximal_set->to_string() + " is not a maximal independent set");

    InequalityRecord rec;
    rec.r = r;
    rec.star_free = is_star_free(g, r, limits).star_free;
    rec.alpha = max_independent_set(g, limits).optimum;
    rec.gamma = min_dominating_set(g, limits).optimum;
    rec.gamma0 = min_independent_dominating_set(g, limits).optimum;
    rec.alpha_prime = maximal_set ? maximal_set->size() : greedy_mis(g).result.size();

    const auto k = r - 1;
    const auto a = rec.alpha, gm = rec.gamma, g0 = rec.gamma0, ap = rec.alpha_prime;
    rec.checks = {
        {"gamma <= alpha", gm <= a},
        {"alpha <= (r-1)*gamma", a <= k * gm},
        {"alpha'/(r-1) <= gamma", ap <= k * gm},
        {"gamma <= gamma0", gm <= g0},
        {"gamma0 <= alpha'", g0 <= ap},
        {"alpha' <= alpha", ap <= a},
        {"alpha <= (r-1)*alpha'", a <= k * ap},
    };
    return rec;
}

WorstRatioResult greedy_worst_ratio_search(std::size_t r, std::size_t n_max, std::size_t trials, std::uint64_t seed,
                                           const SolverLimits& limits) {
    if (r < 3) throw std::invalid_argument("r must be at least 3");
    if (n_max > limits.max_vertices) throw SolverCapExceeded(n_max, limits.max_vertices);
    if (n_max < 1) throw std::invalid_argument("n_max must be positive");

    std::mt19937_64 rng(seed);
    WorstRatioResult result;
    result.r = r;
    bool have_best = false;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t n_min = std::min(r + 1, n_max);
        const std::size_t n = n_min + static_cast<std::size_t>(rng() % (n_max - n_min + 1));
        const double prob = 0.05 + 0.6 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        const std::uint64_t graph_seed = rng();
        const Graph g = random_star_free(n, prob, r, graph_seed, limits);
        const auto alpha = max_independent_set(g, limits).optimum;

        std::vector<std::pair<std::string, VertexSet>> runs;
        runs.emplace_back("min_index", greedy_mis(g).result);
        for (int i = 0; i < 4; ++i) {
            const auto tie_seed = rng();
            runs.emplace_back("seeded:" + std::to_string(tie_seed), greedy_mis(g, TieBreak::seeded(tie_seed)).result);
        }
        if (auto worst = greedy_worst_tie_break(g)) runs.emplace_back("adversarial", worst->result);

        for (auto& [label, set] : runs) {
            WorstRatioObservation obs{trial, n, g.size(), graph_seed, prob, label, alpha, set.size(),
                                      approximation_ratio(ProblemKind::MIS, alpha, set.size())};
            if (!obs.ratio.at_most(r - 1))
                throw BoundViolation("greedy ratio " + obs.ratio.to_string() + " exceeds r - 1 = " +
                                         std::to_string(r - 1) + " in trial " + std::to_string(trial),
                                     "trial:" + std::to_string(trial), write_graph(g, GraphFormat::DIMACS));
            if (!have_best || result.best.ratio < obs.ratio) {
                result.best = obs;
                result.best_graph = g;
                have_best = true;
            }
            result.observations.push_back(std::move(obs));
        }
    }
    return result;
}

std::string to_csv(const WorstRatioResult& result) {
    std::ostringstream out;
    out << "schema,trial,n,m,r,graph_seed,prob,tie_break,alpha,alpha_prime,ratio_num,ratio_den,ratio\n";
    for (const auto& o : result.observations) {
        out << kWorstRatioCsvSchema << ',' << o.trial << ',' << o.n << ',' << o.m << ',' << result.r << ','
            << o.graph_seed << ',' << decimal(o.prob) << ',' << o.tie_break << ',' << o.alpha << ','
            << o.alpha_prime << ',' << o.ratio.num << ',' << o.ratio.den << ',' << decimal(o.ratio.to_double())
            << '\n';
    }
    return out.str();
}

} // namespace starfree
