#include "qboost/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qboost {

namespace {

using nlohmann::json;

std::string real_cell(double value, bool present) { return present ? format_real(value) : ""; }

std::string opt_cell(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) cells.push_back(cell);
    if (!line.empty() && line.back() == sep) cells.emplace_back();
    return cells;
}

double parse_real(const std::string& cell) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw MalformedInput("not a real number: '" + cell + "'");
    }
    return v;
}

std::optional<double> parse_opt_real(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    return parse_real(cell);
}

bool parse_flag(const std::string& cell) {
    if (cell == "true") return true;
    if (cell == "false") return false;
    throw MalformedInput("not a flag: '" + cell + "'");
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json params_json(const PointParams& params) {
    switch (params.index()) {
        case 0: {
            const auto& c = std::get<ClassicalParams>(params);
            return {{"p", c.p.value()}, {"q_r", c.q_r.value()}, {"q_n", c.q_n.value()}};
        }
        case 1: {
            const auto& q = std::get<QuantumParams>(params);
            return {{"phi", q.phi()}, {"alpha", q.alpha()}};
        }
        default: {
            const auto& e = std::get<EmpiricalRates>(params);
            return {{"p_r", opt_json(e.p_r)},
                    {"p_x_given_r", opt_json(e.p_x_given_r)},
                    {"p_x_given_n", opt_json(e.p_x_given_n)}};
        }
    }
}

json empirical_json(const EmpiricalValue& v) {
    if (v.defined()) {
        json j = to_json(*v.value);
        j["defined"] = true;
        return j;
    }
    return {{"defined", false},
            {"reason", v.failure ? std::string(to_string(*v.failure)) : std::string()}};
}

std::uint64_t parse_count(const std::string& token) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw MalformedInput("not a non-negative integer: '" + token + "'");
    }
    return v;
}

}  // namespace

std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(std::span<const ScatterPoint> points, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const ScatterPoint& pt : points) {
        out << to_string(pt.model()) << ',';
        switch (pt.params.index()) {
            case 0: {
                const auto& c = std::get<ClassicalParams>(pt.params);
                out << format_real(c.p.value()) << ',' << format_real(c.q_r.value()) << ','
                    << format_real(c.q_n.value());
                break;
            }
            case 1: {
                const auto& q = std::get<QuantumParams>(pt.params);
                out << format_real(q.phi()) << ',' << format_real(q.alpha()) << ',';
                break;
            }
            default: {
                const auto& e = std::get<EmpiricalRates>(pt.params);
                out << opt_cell(e.p_r) << ',' << opt_cell(e.p_x_given_r) << ','
                    << opt_cell(e.p_x_given_n);
                break;
            }
        }
        out << ',' << real_cell(pt.a, pt.accardi_defined) << ','
            << real_cell(pt.delta, pt.boost_defined) << ','
            << (pt.accardi_defined ? "true" : "false") << ','
            << (pt.boost_defined ? "true" : "false") << '\n';
    }
}

void export_csv(std::span<const ScatterPoint> points, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
    write_csv(points, out);
    out.flush();
    if (!out) throw IoFailure("write to " + path.string() + " failed");
}

std::vector<ScatterPoint> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw MalformedInput("missing or unexpected CSV header");
    }
    std::vector<ScatterPoint> points;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != 8) {
            throw MalformedInput("expected 8 CSV columns, got " + std::to_string(cells.size()));
        }
        ScatterPoint pt{EmpiricalRates{}};
        try {
            if (cells[0] == "classical") {
                pt.params = ClassicalParams{Probability(parse_real(cells[1])),
                                            Probability(parse_real(cells[2])),
                                            Probability(parse_real(cells[3]))};
            } else if (cells[0] == "quantum") {
                if (!cells[3].empty()) throw MalformedInput("quantum rows have no param3");
                pt.params = QuantumParams(parse_real(cells[1]), parse_real(cells[2]));
            } else if (cells[0] == "empirical") {
                pt.params = EmpiricalRates{parse_opt_real(cells[1]), parse_opt_real(cells[2]),
                                           parse_opt_real(cells[3])};
            } else {
                throw MalformedInput("unknown model '" + cells[0] + "'");
            }
        } catch (const InvalidArgument& e) {
            throw MalformedInput(e.what());
        }
        pt.accardi_defined = parse_flag(cells[6]);
        pt.boost_defined = parse_flag(cells[7]);
        pt.a = pt.accardi_defined ? parse_real(cells[4]) : std::nan("");
        pt.delta = pt.boost_defined ? parse_real(cells[5]) : std::nan("");
        points.push_back(std::move(pt));
    }
    return points;
}

void write_gnuplot(std::span<const ScatterPoint> points, std::ostream& out) {
    out << "# a delta\n";
    for (const ScatterPoint& pt : points) {
        if (!pt.accardi_defined || !pt.boost_defined) continue;
        out << format_real(pt.a) << ' ' << format_real(pt.delta) << '\n';
    }
}

json to_json(const EstimateWithError& e) {
    return {{"estimate", e.estimate}, {"std_error", e.std_error}, {"n", e.n}};
}

json to_json(const ScatterPoint& point) {
    return {
        {"model", to_string(point.model())},
        {"params", params_json(point.params)},
        {"a", point.accardi_defined ? json(point.a) : json(nullptr)},
        {"delta", point.boost_defined ? json(point.delta) : json(nullptr)},
        {"a_std_error", point.a_std_error},
        {"delta_std_error", point.delta_std_error},
        {"accardi_defined", point.accardi_defined},
        {"boost_defined", point.boost_defined},
    };
}

json to_json(const SweepSummary& s) {
    return {
        {"n_points", s.n_points},
        {"n_defined", s.n_defined},
        {"fraction_a_below_0", s.fraction_a_below_0},
        {"fraction_a_above_1", s.fraction_a_above_1},
        {"max_delta", opt_json(s.max_delta)},
        {"max_delta_classical_region", opt_json(s.max_delta_classical_region)},
        {"max_delta_violation", opt_json(s.max_delta_violation)},
    };
}

json to_json(const SweepResult& result) {
    json points = json::array();
    for (const ScatterPoint& pt : result.points) points.push_back(to_json(pt));
    return {{"points", std::move(points)}, {"summary", to_json(result.summary)}};
}

json to_json(const SimResult& result) {
    const bool classical = std::holds_alternative<ClassicalParams>(result.config.model);
    json config = {
        {"model", classical ? "classical" : "quantum"},
        {"params", std::visit([](const auto& p) { return params_json(PointParams{p}); },
                              result.config.model)},
        {"n_per_arm", result.config.n_per_arm},
        {"seed", result.config.seed},
    };

    json arms = json::object();
    for (const ArmKind kind : kAllArms) {
        const ArmRun& run = result.arm(kind);
        json a = {{"starved", run.starved()}, {"draws_consumed", run.draws_consumed}};
        a["n_total"] = run.counts ? json(run.counts->n_total()) : json(nullptr);
        a["n_success"] = run.counts ? json(run.counts->n_success()) : json(nullptr);
        arms[std::string(to_string(kind))] = std::move(a);
    }
    json baseline = {{"starved", false},
                     {"draws_consumed", result.baseline.n_total()},
                     {"n_total", result.baseline.n_total()},
                     {"n_success", result.baseline.n_success()}};

    json rates = json::object();
    for (const ArmKind kind : kAllArms) {
        const ArmRun& run = result.arm(kind);
        rates[std::string(to_string(kind))] =
            run.counts ? to_json(estimate_rate(*run.counts)) : json(nullptr);
    }
    rates["baseline_relevance"] = to_json(result.baseline_relevance());

    return {
        {"config", std::move(config)},
        {"arms", std::move(arms)},
        {"baseline_relevance", std::move(baseline)},
        {"rates", std::move(rates)},
        {"accardi", empirical_json(result.accardi)},
        {"boost", empirical_json(result.boost)},
    };
}

CollectionCounts parse_counts(std::istream& in) {
    std::vector<std::uint64_t> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) values.push_back(parse_count(token));
    }
    if (values.size() != 5) {
        throw MalformedInput("expected 5 counts (N N_R N_XR N_XN N_X), got " +
                             std::to_string(values.size()));
    }
    const CollectionCounts c{values[0], values[1], values[2], values[3], values[4]};
    if (c.n == 0) throw MalformedInput("N must be positive");
    if (c.n_relevant > c.n) throw MalformedInput("N_R exceeds N");
    if (c.n_term_relevant > c.n_relevant) throw MalformedInput("N_XR exceeds N_R");
    if (c.n_term_non_relevant > c.n - c.n_relevant) throw MalformedInput("N_XN exceeds N - N_R");
    if (c.n_term > c.n) throw MalformedInput("N_X exceeds N");
    if (c.n_term_relevant > c.n_term) throw MalformedInput("N_XR exceeds N_X");
    return c;
}

CollectionCounts read_counts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open " + path.string());
    return parse_counts(in);
}

ScatterPoint estimate_from_counts(const CollectionCounts& c) {
    const ArmCounts relevance(c.n, c.n_relevant);
    const ArmCounts arm_r(c.n_relevant, c.n_term_relevant);
    const ArmCounts arm_n(c.n - c.n_relevant, c.n_term_non_relevant);
    const ArmCounts arm_direct(c.n, c.n_term);
    const ArmCounts expanded(c.n_term, c.n_term_relevant);

    auto rate_or_none = [](const ArmCounts& arm) -> std::optional<double> {
        if (arm.n_total() == 0) return std::nullopt;
        return estimate_rate(arm).estimate;
    };

    ScatterPoint pt{EmpiricalRates{rate_or_none(relevance), rate_or_none(arm_r),
                                   rate_or_none(arm_n)}};
    try {
        const auto a = accardi_from_counts(arm_r, arm_n, arm_direct);
        pt.a = a.estimate;
        pt.a_std_error = a.std_error;
        pt.accardi_defined = true;
    } catch (const AccardiUndefined&) {
    } catch (const EmptyArm&) {
    }
    try {
        const auto d = boost_from_estimates(estimate_rate(expanded), estimate_rate(relevance));
        pt.delta = d.estimate;
        pt.delta_std_error = d.std_error;
        pt.boost_defined = true;
    } catch (const BoostUndefined&) {
    } catch (const EmptyArm&) {
    }
    if (!pt.accardi_defined) pt.a = std::nan("");
    if (!pt.boost_defined) pt.delta = std::nan("");
    return pt;
}

ScatterPoint estimate_from_file(const std::filesystem::path& path) {
    return estimate_from_counts(read_counts(path));
}

}  // namespace qboost
