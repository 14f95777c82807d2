// qboost: (A, Delta) evaluation of term pre-selection under the urn and the
// spin-1/2 document models.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qboost/io.hpp"
#include "qboost/stream_sim.hpp"
#include "qboost/sweep.hpp"

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitIo = 3;

enum class Format { Csv, Json };

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string out;
    Format format = Format::Csv;
};

struct PointOptions {
    std::string mode = "analytic";
    std::uint64_t n_per_arm = 10'000;
    double margin = qboost::kDefaultExclusionMargin;
};

qboost::Mode parse_mode(const std::string& s) {
    return s == "montecarlo" ? qboost::Mode::MonteCarlo : qboost::Mode::Analytic;
}

void add_point_options(CLI::App* cmd, PointOptions& opts) {
    cmd->add_option("--mode", opts.mode, "analytic closed forms or montecarlo streams")
        ->check(CLI::IsMember({"analytic", "montecarlo"}))
        ->capture_default_str();
    cmd->add_option("--n-per-arm", opts.n_per_arm, "accepted documents per arm (montecarlo)")
        ->check(CLI::Range(std::uint64_t{1}, qboost::kMaxDocumentsPerArm))
        ->capture_default_str();
    cmd->add_option("--margin", opts.margin, "exclusion margin around singular parameters")
        ->check(CLI::Range(0.0, 0.4999999))
        ->capture_default_str();
}

// Writes the rendered document to --out, or stdout when --out is empty.
void emit(const GlobalOptions& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw qboost::IoFailure("write to stdout failed");
        return;
    }
    std::ofstream out(g.out, std::ios::binary);
    if (!out) throw qboost::IoFailure("cannot open " + g.out + " for writing");
    out << text;
    out.flush();
    if (!out) throw qboost::IoFailure("write to " + g.out + " failed");
}

std::string render_point(const GlobalOptions& g, const qboost::ScatterPoint& pt) {
    if (g.format == Format::Json) return qboost::to_json(pt).dump(2) + "\n";
    std::ostringstream ss;
    qboost::write_csv(std::span(&pt, 1), ss);
    return ss.str();
}

std::string render_sim(const GlobalOptions& g, const qboost::SimResult& sim) {
    if (g.format == Format::Json) return qboost::to_json(sim).dump(2) + "\n";
    std::ostringstream ss;
    ss << "arm,n_total,n_success,draws_consumed,starved\n";
    for (const auto kind : qboost::kAllArms) {
        const auto& run = sim.arm(kind);
        ss << qboost::to_string(kind) << ','
           << (run.counts ? std::to_string(run.counts->n_total()) : "") << ','
           << (run.counts ? std::to_string(run.counts->n_success()) : "") << ','
           << run.draws_consumed << ',' << (run.starved() ? "true" : "false") << '\n';
    }
    ss << "baseline_relevance," << sim.baseline.n_total() << ',' << sim.baseline.n_success()
       << ',' << sim.baseline.n_total() << ",false\n";
    return ss.str();
}

void print_summary(const qboost::SweepSummary& s) {
    std::cerr << qboost::to_json(s).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qboost: Accardi invariant and precision boost of query expansion "
                 "for classical and quantum document models"};
    app.require_subcommand(1);

    GlobalOptions g;
    std::string format = "csv";
    app.add_option("--seed", g.seed, "64-bit seed for all randomness")->capture_default_str();
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // classical
    double p = 0.5, q_r = 0.8, q_n = 0.2;
    PointOptions classical_opts;
    auto* classical = app.add_subcommand("classical", "evaluate one urn-model point");
    classical->fallthrough();
    classical->add_option("--p", p, "P(R)")->required()->check(CLI::Range(0.0, 1.0));
    classical->add_option("--qr", q_r, "P(X|R)")->required()->check(CLI::Range(0.0, 1.0));
    classical->add_option("--qn", q_n, "P(X|~R)")->required()->check(CLI::Range(0.0, 1.0));
    add_point_options(classical, classical_opts);

    // quantum
    double phi = std::numbers::pi / 3, alpha = std::numbers::pi / 4;
    PointOptions quantum_opts;
    auto* quantum = app.add_subcommand("quantum", "evaluate one spin-1/2 model point");
    quantum->fallthrough();
    quantum->add_option("--phi", phi, "query-state angle in [0, pi]")
        ->required()
        ->check(CLI::Range(0.0, std::numbers::pi));
    quantum->add_option("--alpha", alpha, "term-state angle in [0, pi]")
        ->required()
        ->check(CLI::Range(0.0, std::numbers::pi));
    add_point_options(quantum, quantum_opts);

    // sweep / plotdata
    std::string sweep_model = "quantum";
    std::uint64_t n_points = 10'000;
    unsigned threads = 0;
    PointOptions sweep_opts;
    auto add_sweep_options = [&](CLI::App* cmd) {
        cmd->fallthrough();
        cmd->add_option("--model", sweep_model, "model to sample")
            ->check(CLI::IsMember({"classical", "quantum"}))
            ->capture_default_str();
        cmd->add_option("--n-points", n_points, "number of sampled parameter points")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--threads", threads, "worker threads (0: all cores)")
            ->capture_default_str();
        add_point_options(cmd, sweep_opts);
    };
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "uniform parameter sweep producing (A, Delta) scatter data; "
                 "summary goes to stderr");
    add_sweep_options(sweep_cmd);
    auto* plot_cmd = app.add_subcommand(
        "plotdata", "like sweep, but emits gnuplot-ready 'a delta' columns of defined points");
    add_sweep_options(plot_cmd);

    // simulate
    std::string sim_model = "quantum";
    double sim_p = 0.5, sim_qr = 0.8, sim_qn = 0.2;
    double sim_phi = std::numbers::pi / 3, sim_alpha = std::numbers::pi / 4;
    std::uint64_t sim_n = 10'000;
    auto* simulate_cmd = app.add_subcommand(
        "simulate", "run the Monte Carlo measurement arms for one parameter point");
    simulate_cmd->fallthrough();
    simulate_cmd->add_option("--model", sim_model, "model to simulate")
        ->check(CLI::IsMember({"classical", "quantum"}))
        ->capture_default_str();
    simulate_cmd->add_option("--p", sim_p, "P(R) (classical)")->check(CLI::Range(0.0, 1.0));
    simulate_cmd->add_option("--qr", sim_qr, "P(X|R) (classical)")->check(CLI::Range(0.0, 1.0));
    simulate_cmd->add_option("--qn", sim_qn, "P(X|~R) (classical)")->check(CLI::Range(0.0, 1.0));
    simulate_cmd->add_option("--phi", sim_phi, "query-state angle (quantum)")
        ->check(CLI::Range(0.0, std::numbers::pi));
    simulate_cmd->add_option("--alpha", sim_alpha, "term-state angle (quantum)")
        ->check(CLI::Range(0.0, std::numbers::pi));
    simulate_cmd->add_option("--n-per-arm", sim_n, "accepted documents per arm")
        ->check(CLI::Range(std::uint64_t{1}, qboost::kMaxDocumentsPerArm))
        ->capture_default_str();

    // estimate
    std::string counts_path;
    auto* estimate_cmd = app.add_subcommand(
        "estimate", "(A, Delta) from a count file: N N_R N_XR N_XN N_X, '#' comments");
    estimate_cmd->fallthrough();
    estimate_cmd->add_option("file", counts_path, "count file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }
    g.format = format == "json" ? Format::Json : Format::Csv;

    try {
        if (*classical) {
            const qboost::ClassicalParams params{qboost::Probability(p), qboost::Probability(q_r),
                                                 qboost::Probability(q_n)};
            const auto pt = qboost::eval_point(params, parse_mode(classical_opts.mode),
                                               classical_opts.n_per_arm, g.seed,
                                               classical_opts.margin);
            emit(g, render_point(g, pt));
        } else if (*quantum) {
            const auto pt = qboost::eval_point(qboost::QuantumParams(phi, alpha),
                                               parse_mode(quantum_opts.mode),
                                               quantum_opts.n_per_arm, g.seed, quantum_opts.margin);
            emit(g, render_point(g, pt));
        } else if (*sweep_cmd || *plot_cmd) {
            qboost::SweepConfig config;
            config.model =
                sweep_model == "classical" ? qboost::ModelKind::Classical : qboost::ModelKind::Quantum;
            config.n_points = n_points;
            config.seed = g.seed;
            config.mode = parse_mode(sweep_opts.mode);
            config.n_per_arm = sweep_opts.n_per_arm;
            config.exclusion_margin = sweep_opts.margin;
            config.threads = threads;
            const auto result = qboost::sweep(config);
            std::ostringstream ss;
            if (*plot_cmd) {
                qboost::write_gnuplot(result.points, ss);
            } else if (g.format == Format::Json) {
                ss << qboost::to_json(result).dump(2) << '\n';
            } else {
                qboost::write_csv(result.points, ss);
            }
            emit(g, ss.str());
            print_summary(result.summary);
        } else if (*simulate_cmd) {
            qboost::ModelParams model =
                sim_model == "classical"
                    ? qboost::ModelParams{qboost::ClassicalParams{qboost::Probability(sim_p),
                                                                  qboost::Probability(sim_qr),
                                                                  qboost::Probability(sim_qn)}}
                    : qboost::ModelParams{qboost::QuantumParams(sim_phi, sim_alpha)};
            emit(g, render_sim(g, qboost::simulate({model, sim_n, g.seed})));
        } else if (*estimate_cmd) {
            emit(g, render_point(g, qboost::estimate_from_file(counts_path)));
        }
    } catch (const qboost::Error& e) {
        std::cerr << "qboost: " << to_string(e.kind()) << ": " << e.what() << '\n';
        switch (e.kind()) {
            case qboost::ErrorKind::IoFailure: return kExitIo;
            case qboost::ErrorKind::MalformedInput:
            case qboost::ErrorKind::InvalidArgument: return kExitMalformed;
            default: return 1;
        }
    }
    return 0;
}
