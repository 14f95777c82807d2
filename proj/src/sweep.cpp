#include "qboost/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "qboost/rng.hpp"

namespace qboost {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Exclusions {
    bool accardi = false;
    bool boost = false;
};

Exclusions excluded(const ModelParams& params, double margin) {
    const double m = std::max(margin, kDenominatorEpsilon);
    return std::visit(
        Overloaded{
            [&](const ClassicalParams& c) {
                const double marginal = marginal_term_rate(c).value();
                return Exclusions{std::abs(c.q_r.value() - c.q_n.value()) < m,
                                  c.p.value() < m || marginal < m};
            },
            [&](const QuantumParams& q) {
                return Exclusions{std::abs(std::cos(q.alpha())) < m,
                                  quantum_rates(q).p_r.value() < m};
            },
        },
        params);
}

PointParams widen(const ModelParams& params) {
    return std::visit([](const auto& p) { return PointParams{p}; }, params);
}

void eval_analytic(const ModelParams& params, const Exclusions& skip, ScatterPoint& point) {
    try {
        if (!skip.accardi) {
            point.a = std::visit(Overloaded{[](const ClassicalParams& c) { return accardi_classical(c); },
                                            [](const QuantumParams& q) { return accardi_quantum(q); }},
                                 params);
            point.accardi_defined = true;
        }
    } catch (const AccardiUndefined&) {
    }
    try {
        if (!skip.boost) {
            point.delta = std::visit(Overloaded{[](const ClassicalParams& c) { return boost_classical(c); },
                                                [](const QuantumParams& q) { return boost_quantum(q); }},
                                     params);
            point.boost_defined = true;
        }
    } catch (const BoostUndefined&) {
    }
}

void eval_montecarlo(const ModelParams& params, const Exclusions& skip, std::uint64_t n_per_arm,
                     std::uint64_t seed, ScatterPoint& point) {
    const SimResult sim = simulate({params, n_per_arm, seed});
    if (!skip.accardi && sim.accardi.defined()) {
        point.a = sim.accardi.value->estimate;
        point.a_std_error = sim.accardi.value->std_error;
        point.accardi_defined = true;
    }
    if (!skip.boost && sim.boost.defined()) {
        point.delta = sim.boost.value->estimate;
        point.delta_std_error = sim.boost.value->std_error;
        point.boost_defined = true;
    }
}

}  // namespace

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Classical: return "classical";
        case ModelKind::Quantum: return "quantum";
        case ModelKind::Empirical: return "empirical";
    }
    return "unknown";
}

std::string_view to_string(Mode mode) {
    return mode == Mode::Analytic ? "analytic" : "montecarlo";
}

ModelKind ScatterPoint::model() const noexcept {
    switch (params.index()) {
        case 0: return ModelKind::Classical;
        case 1: return ModelKind::Quantum;
        default: return ModelKind::Empirical;
    }
}

void validate(const SweepConfig& config) {
    if (config.model == ModelKind::Empirical) {
        throw InvalidArgument("sweeps sample the classical or quantum model only");
    }
    if (config.n_points < 1) {
        throw InvalidArgument("n_points must be at least 1");
    }
    if (config.mode == Mode::MonteCarlo &&
        (config.n_per_arm < 1 || config.n_per_arm > kMaxDocumentsPerArm)) {
        throw InvalidArgument("n_per_arm must lie in [1, 1e12]");
    }
    // Every guarded coordinate spans a range of width 1.
    if (!(config.exclusion_margin >= 0.0 && config.exclusion_margin < 0.5)) {
        throw InvalidArgument("exclusion_margin must lie in [0, 0.5)");
    }
}

ModelParams sample_params(ModelKind model, std::uint64_t seed, std::uint64_t index) {
    RandomStream rng(derive_seed(seed, {index, 0}));
    if (model == ModelKind::Quantum) {
        const double phi = rng.uniform(0.0, std::numbers::pi);
        const double alpha = rng.uniform(0.0, std::numbers::pi);
        return QuantumParams(phi, alpha);
    }
    const double p = rng.uniform();
    const double q_r = rng.uniform();
    const double q_n = rng.uniform();
    return ClassicalParams{Probability(p), Probability(q_r), Probability(q_n)};
}

ScatterPoint eval_point(const ModelParams& params, Mode mode, std::uint64_t n_per_arm,
                        std::uint64_t seed, double exclusion_margin) {
    ScatterPoint point{widen(params)};
    const Exclusions skip = excluded(params, exclusion_margin);
    if (mode == Mode::Analytic) {
        eval_analytic(params, skip, point);
    } else {
        eval_montecarlo(params, skip, n_per_arm, seed, point);
    }
    if (!point.accardi_defined) point.a = std::numeric_limits<double>::quiet_NaN();
    if (!point.boost_defined) point.delta = std::numeric_limits<double>::quiet_NaN();
    return point;
}

SweepSummary summarize(std::span<const ScatterPoint> points) {
    SweepSummary s;
    s.n_points = points.size();
    std::uint64_t below = 0;
    std::uint64_t above = 0;
    auto bump = [](std::optional<double>& slot, double v) {
        if (!slot || v > *slot) slot = v;
    };
    for (const ScatterPoint& pt : points) {
        if (!pt.accardi_defined || !pt.boost_defined) continue;
        ++s.n_defined;
        bump(s.max_delta, pt.delta);
        if (pt.a < 0.0) {
            ++below;
            bump(s.max_delta_violation, pt.delta);
        } else if (pt.a > 1.0) {
            ++above;
            bump(s.max_delta_violation, pt.delta);
        } else {
            bump(s.max_delta_classical_region, pt.delta);
        }
    }
    if (s.n_defined > 0) {
        s.fraction_a_below_0 = static_cast<double>(below) / static_cast<double>(s.n_defined);
        s.fraction_a_above_1 = static_cast<double>(above) / static_cast<double>(s.n_defined);
    }
    return s;
}

SweepResult sweep(const SweepConfig& config) {
    validate(config);
    SweepResult result;
    result.points.resize(config.n_points, ScatterPoint{EmpiricalRates{}});

    const std::uint64_t n = config.n_points;
    unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, n));

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const ModelParams params = sample_params(config.model, config.seed, i);
            result.points[i] = eval_point(params, config.mode, config.n_per_arm,
                                          derive_seed(config.seed, {i, 1}),
                                          config.exclusion_margin);
        }
    };

    if (threads == 1) {
        work(0, n);
    } else {
        // Workers own disjoint index ranges; exceptions cannot escape eval_point
        // for a validated config.
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, n * t / threads, n * (t + 1) / threads);
        }
    }
    result.summary = summarize(result.points);
    return result;
}

}  // namespace qboost
