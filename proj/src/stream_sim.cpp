#include "qboost/stream_sim.hpp"

#include <cmath>
#include <string>

#include "qboost/rng.hpp"

namespace qboost {

namespace {

constexpr std::uint64_t kBaselineTag = 4;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Outcome of one raw document in an arm: rejected, or accepted with the
// tallied property.
enum class Draw { Rejected, Failure, Success };

Draw tally(bool accepted, bool success) {
    if (!accepted) return Draw::Rejected;
    return success ? Draw::Success : Draw::Failure;
}

// Urn documents carry definite labels: draw relevance first, then the term
// conditional on relevance, and let the arm decide what it observes.
Draw draw_classical(const ClassicalParams& params, ArmKind kind, RandomStream& rng) {
    const bool relevant = rng.bernoulli(params.p.value());
    const bool has_term = rng.bernoulli(relevant ? params.q_r.value() : params.q_n.value());
    switch (kind) {
        case ArmKind::CondOnRelevant: return tally(relevant, has_term);
        case ArmKind::CondOnNonRelevant: return tally(!relevant, has_term);
        case ArmKind::DirectTerm: return tally(true, has_term);
        case ArmKind::ExpandThenRelevance: return tally(has_term, relevant);
    }
    return Draw::Rejected;
}

// Sequential Born-rule measurements. The second measurement only sees the
// eigenstate the first one collapsed onto.
Draw draw_quantum(const QuantumRates& rates, ArmKind kind, RandomStream& rng) {
    switch (kind) {
        case ArmKind::CondOnRelevant: {
            if (!rng.bernoulli(rates.p_r.value())) return Draw::Rejected;
            return tally(true, rng.bernoulli(rates.p_x_given_r.value()));
        }
        case ArmKind::CondOnNonRelevant: {
            if (rng.bernoulli(rates.p_r.value())) return Draw::Rejected;
            return tally(true, rng.bernoulli(rates.p_x_given_n.value()));
        }
        case ArmKind::DirectTerm:
            return tally(true, rng.bernoulli(rates.p_x_direct.value()));
        case ArmKind::ExpandThenRelevance: {
            if (!rng.bernoulli(rates.p_x_direct.value())) return Draw::Rejected;
            // |<R|X>|^2 on the collapsed term state.
            return tally(true, rng.bernoulli(rates.p_x_given_r.value()));
        }
    }
    return Draw::Rejected;
}

void check_n(std::uint64_t n_per_arm) {
    if (n_per_arm < 1 || n_per_arm > kMaxDocumentsPerArm) {
        throw InvalidArgument("n_per_arm must lie in [1, 1e12], got " + std::to_string(n_per_arm));
    }
}

template <class DrawFn>
ArmCounts run_until_accepted(std::uint64_t n_per_arm, DrawFn&& draw, ArmKind kind,
                             std::uint64_t* draws_consumed) {
    const std::uint64_t max_draws = kMaxDrawsPerAccepted * n_per_arm;
    std::uint64_t accepted = 0;
    std::uint64_t successes = 0;
    std::uint64_t draws = 0;
    while (accepted < n_per_arm) {
        if (draws == max_draws) {
            if (draws_consumed) *draws_consumed = draws;
            throw ArmStarvation("arm " + std::string(to_string(kind)) + " accepted " +
                                std::to_string(accepted) + " of " + std::to_string(n_per_arm) +
                                " documents in " + std::to_string(draws) + " draws");
        }
        ++draws;
        switch (draw()) {
            case Draw::Rejected: break;
            case Draw::Failure: ++accepted; break;
            case Draw::Success:
                ++accepted;
                ++successes;
                break;
        }
    }
    if (draws_consumed) *draws_consumed = draws;
    return ArmCounts(accepted, successes);
}

EmpiricalValue capture(auto&& compute) {
    try {
        return {compute(), std::nullopt};
    } catch (const Error& e) {
        return {std::nullopt, e.kind()};
    }
}

}  // namespace

std::string_view to_string(ArmKind kind) {
    switch (kind) {
        case ArmKind::CondOnRelevant: return "cond_on_relevant";
        case ArmKind::CondOnNonRelevant: return "cond_on_non_relevant";
        case ArmKind::DirectTerm: return "direct_term";
        case ArmKind::ExpandThenRelevance: return "expand_then_relevance";
    }
    return "unknown";
}

const ArmCounts& SimResult::counts(ArmKind kind) const {
    const ArmRun& run = arm(kind);
    if (run.starved()) {
        throw ArmStarvation("arm " + std::string(to_string(kind)) + " starved");
    }
    return *run.counts;
}

ArmCounts simulate_arm(const ModelParams& model, ArmKind kind, std::uint64_t n_per_arm,
                       std::uint64_t seed, std::uint64_t* draws_consumed) {
    check_n(n_per_arm);
    RandomStream rng(derive_seed(seed, {static_cast<std::uint64_t>(kind)}));
    return std::visit(
        Overloaded{
            [&](const ClassicalParams& params) {
                return run_until_accepted(
                    n_per_arm, [&] { return draw_classical(params, kind, rng); }, kind,
                    draws_consumed);
            },
            [&](const QuantumParams& params) {
                const QuantumRates rates = quantum_rates(params);
                return run_until_accepted(
                    n_per_arm, [&] { return draw_quantum(rates, kind, rng); }, kind,
                    draws_consumed);
            },
        },
        model);
}

ArmCounts simulate_baseline(const ModelParams& model, std::uint64_t n_per_arm,
                            std::uint64_t seed) {
    check_n(n_per_arm);
    RandomStream rng(derive_seed(seed, {kBaselineTag}));
    const double p_r = baseline_relevance_probability(model);
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < n_per_arm; ++i) {
        successes += rng.bernoulli(p_r) ? 1 : 0;
    }
    return ArmCounts(n_per_arm, successes);
}

SimResult simulate(const SimConfig& config) {
    SimResult result{config, {}, simulate_baseline(config.model, config.n_per_arm, config.seed),
                     std::nullopt, {}, {}};
    for (const ArmKind kind : kAllArms) {
        ArmRun& run = result.arms[static_cast<std::size_t>(kind)];
        try {
            run.counts = simulate_arm(config.model, kind, config.n_per_arm, config.seed,
                                      &run.draws_consumed);
        } catch (const ArmStarvation&) {
            run.counts.reset();
        }
    }

    result.accardi = capture([&] {
        const auto x_r = estimate_rate(result.counts(ArmKind::CondOnRelevant));
        const auto x_n = estimate_rate(result.counts(ArmKind::CondOnNonRelevant));
        const auto x = estimate_rate(result.counts(ArmKind::DirectTerm));
        result.rates = RateTriple{Probability(x_r.estimate), Probability(x_n.estimate),
                                  Probability(x.estimate)};
        return accardi_from_estimates(x_r, x_n, x);
    });
    result.boost = capture([&] { return empirical_boost(result, result.baseline_relevance()); });
    return result;
}

SimResult simulate_classical(const ClassicalParams& params, std::uint64_t n_per_arm,
                             std::uint64_t seed) {
    return simulate({params, n_per_arm, seed});
}

SimResult simulate_quantum(const QuantumParams& params, std::uint64_t n_per_arm,
                           std::uint64_t seed) {
    return simulate({params, n_per_arm, seed});
}

EstimateWithError empirical_boost(const SimResult& result,
                                  const EstimateWithError& baseline_p_r) {
    if (baseline_p_r.estimate < kDenominatorEpsilon) {
        throw BoostUndefined("baseline relevance rate vanishes");
    }
    const auto expanded = estimate_rate(result.counts(ArmKind::ExpandThenRelevance));
    return boost_from_estimates(expanded, baseline_p_r);
}

double baseline_relevance_probability(const ModelParams& model) {
    return std::visit(Overloaded{
                          [](const ClassicalParams& params) { return params.p.value(); },
                          [](const QuantumParams& params) {
                              return quantum_rates(params).p_r.value();
                          },
                      },
                      model);
}

double arm_acceptance_probability(const ModelParams& model, ArmKind kind) {
    return std::visit(
        Overloaded{
            [&](const ClassicalParams& params) {
                switch (kind) {
                    case ArmKind::CondOnRelevant: return params.p.value();
                    case ArmKind::CondOnNonRelevant: return 1.0 - params.p.value();
                    case ArmKind::DirectTerm: return 1.0;
                    case ArmKind::ExpandThenRelevance: return marginal_term_rate(params).value();
                }
                return 0.0;
            },
            [&](const QuantumParams& params) {
                const QuantumRates rates = quantum_rates(params);
                switch (kind) {
                    case ArmKind::CondOnRelevant: return rates.p_r.value();
                    case ArmKind::CondOnNonRelevant: return 1.0 - rates.p_r.value();
                    case ArmKind::DirectTerm: return 1.0;
                    case ArmKind::ExpandThenRelevance: return rates.p_x_direct.value();
                }
                return 0.0;
            },
        },
        model);
}

double arm_success_probability(const ModelParams& model, ArmKind kind) {
    return std::visit(
        Overloaded{
            [&](const ClassicalParams& params) {
                switch (kind) {
                    case ArmKind::CondOnRelevant: return params.q_r.value();
                    case ArmKind::CondOnNonRelevant: return params.q_n.value();
                    case ArmKind::DirectTerm: return marginal_term_rate(params).value();
                    case ArmKind::ExpandThenRelevance: return posterior_bayes(params).value();
                }
                return 0.0;
            },
            [&](const QuantumParams& params) {
                const QuantumRates rates = quantum_rates(params);
                switch (kind) {
                    case ArmKind::CondOnRelevant: return rates.p_x_given_r.value();
                    case ArmKind::CondOnNonRelevant: return rates.p_x_given_n.value();
                    case ArmKind::DirectTerm: return rates.p_x_direct.value();
                    case ArmKind::ExpandThenRelevance: return posterior_quantum(params).value();
                }
                return 0.0;
            },
        },
        model);
}

}  // namespace qboost
