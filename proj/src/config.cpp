#include "starfree/config.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "starfree/errors.hpp"

namespace starfree {

std::string Method::to_string() const { return kind == Kind::Greedy ? "greedy" : "local"; }

void ExperimentConfig::validate() const {
    if (instances.empty()) throw std::invalid_argument("experiment needs at least one instance source");
    if (problems.empty()) throw std::invalid_argument("experiment needs at least one problem");
    if (methods.empty()) throw std::invalid_argument("experiment needs at least one method");
    auto check_r = [](std::size_t r) {
        if (r < 3) throw std::invalid_argument("experiment r values must be >= 3");
    };
    for (auto r : r_values) check_r(r);
    for (const auto& src : instances)
        for (auto r : src.r_values) check_r(r);
    for (const auto& m : methods)
        if (m.kind == Method::Kind::Local && m.t == 0) throw std::invalid_argument("local search needs t >= 1");
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto end = s.find(',', pos);
        if (end == std::string_view::npos) end = s.size();
        auto item = trim(s.substr(pos, end - pos));
        if (!item.empty()) out.push_back(std::move(item));
        pos = end + 1;
    }
    return out;
}

class LineContext {
public:
    explicit LineContext(std::size_t line) : line_(line) {}

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

    std::uint64_t to_uint(std::string_view s) const {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size()) fail("expected a non-negative integer, got '" + std::string(s) + "'");
        return value;
    }

    double to_probability(std::string_view s) const {
        try {
            std::size_t used = 0;
            const double value = std::stod(std::string(s), &used);
            if (used != s.size() || !(value >= 0.0 && value <= 1.0)) throw std::invalid_argument("range");
            return value;
        } catch (const std::exception&) {
            fail("expected a probability in [0, 1], got '" + std::string(s) + "'");
        }
    }

private:
    std::size_t line_;
};

InstanceSource parse_instance(std::string_view value, const LineContext& ctx) {
    std::istringstream in{std::string(value)};
    std::string kind;
    in >> kind;
    std::map<std::string, std::string> params;
    for (std::string token; in >> token;) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) ctx.fail("expected key=value, got '" + token + "'");
        if (!params.emplace(token.substr(0, eq), token.substr(eq + 1)).second)
            ctx.fail("repeated parameter '" + token.substr(0, eq) + "'");
    }
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = params.find(key);
        if (it == params.end()) return std::nullopt;
        auto v = it->second;
        params.erase(it);
        return v;
    };
    auto need = [&](const std::string& key) {
        auto v = take(key);
        if (!v) ctx.fail("instance '" + kind + "' needs " + key + "=");
        return *v;
    };

    InstanceSource src;
    if (auto c = take("count")) src.count = ctx.to_uint(*c);
    if (auto s = take("seed")) src.seed = ctx.to_uint(*s);

    if (kind == "star_forest") {
        const auto r = ctx.to_uint(need("r"));
        src.generator = StarForestSpec{ctx.to_uint(need("p")), r};
        src.r_values = {r};
    } else if (kind == "star_free") {
        const auto r = ctx.to_uint(need("r"));
        src.generator = StarFreeSpec{ctx.to_uint(need("n")), ctx.to_probability(need("prob")), r};
        src.r_values = {r};
    } else if (kind == "gnp") {
        src.generator = GnpSpec{ctx.to_uint(need("n")), ctx.to_probability(need("prob"))};
    } else if (kind == "line") {
        src.generator = std::make_shared<LineGraphSpec>(
            LineGraphSpec{GnpSpec{ctx.to_uint(need("n")), ctx.to_probability(need("prob"))}});
    } else if (kind == "fan") {
        src.generator = FanSpec{ctx.to_uint(need("k"))};
    } else if (kind == "file") {
        src.path = need("path");
    } else {
        ctx.fail("unknown instance kind '" + kind + "'");
    }
    if (auto r = take("r")) src.r_values = {ctx.to_uint(*r)};
    if (!params.empty()) ctx.fail("unknown parameter '" + params.begin()->first + "' for '" + kind + "'");
    if (src.count == 0) ctx.fail("count must be positive");
    return src;
}

} // namespace

ExperimentConfig parse_experiment_config(std::string_view text) {
    ExperimentConfig cfg;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (line.empty() || line[0] == '#') continue;

        const LineContext ctx(number);
        const auto eq = line.find('=');
        if (eq == std::string::npos) ctx.fail("expected 'key = value'");
        const auto key = trim(std::string_view(line).substr(0, eq));
        const auto value = trim(std::string_view(line).substr(eq + 1));

        if (key == "seed") {
            cfg.seed = ctx.to_uint(value);
        } else if (key == "cap") {
            cfg.limits.max_vertices = ctx.to_uint(value);
            if (cfg.limits.max_vertices > 64) ctx.fail("cap may not exceed 64");
        } else if (key == "max_iterations") {
            cfg.max_iterations = ctx.to_uint(value);
        } else if (key == "r") {
            cfg.r_values.clear();
            for (const auto& item : split_list(value)) cfg.r_values.push_back(ctx.to_uint(item));
        } else if (key == "problems") {
            cfg.problems.clear();
            for (const auto& item : split_list(value)) {
                try {
                    cfg.problems.push_back(parse_problem(item));
                } catch (const std::invalid_argument& e) {
                    ctx.fail(e.what());
                }
            }
        } else if (key == "methods") {
            cfg.methods.clear();
            for (const auto& item : split_list(value)) {
                if (item == "greedy") {
                    cfg.methods.push_back(Method::greedy());
                } else if (item.rfind("local:", 0) == 0) {
                    const auto t = ctx.to_uint(std::string_view(item).substr(6));
                    if (t == 0) ctx.fail("local search needs t >= 1");
                    cfg.methods.push_back(Method::local(t));
                } else {
                    ctx.fail("unknown method '" + item + "' (expected greedy or local:<t>)");
                }
            }
        } else if (key == "instance") {
            cfg.instances.push_back(parse_instance(value, ctx));
        } else {
            ctx.fail("unknown key '" + key + "'");
        }
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(number, e.what());
    }
    return cfg;
}

} // namespace starfree
