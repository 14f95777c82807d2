#pragma once

// Monte Carlo realization of the measurement arms. Documents arrive one by
// one from the source; an arm keeps drawing until it has accepted n_per_arm
// documents (same number of documents in every arm), or gives up after
// kMaxDrawsPerAccepted * n_per_arm raw draws.
//
//   CondOnRelevant       relevance check, keep R, then check X     -> P(X|R)
//   CondOnNonRelevant    relevance check, keep ~R, then check X    -> P(X|~R)
//   DirectTerm           check X with no relevance check           -> P(X)
//   ExpandThenRelevance  filter on X, then check relevance         -> P(R|X)
//
// A fifth tally, the baseline, checks relevance alone (the unexpanded query)
// and feeds P(R) into the boost.
//
// Every arm draws from its own substream derived from (seed, arm), so arms
// can run in any order or concurrently with identical counts.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "qboost/classical_model.hpp"
#include "qboost/probability.hpp"
#include "qboost/quantum_model.hpp"

namespace qboost {

enum class ArmKind : std::uint8_t {
    CondOnRelevant = 0,
    CondOnNonRelevant = 1,
    DirectTerm = 2,
    ExpandThenRelevance = 3,
};

inline constexpr std::array<ArmKind, 4> kAllArms = {
    ArmKind::CondOnRelevant, ArmKind::CondOnNonRelevant, ArmKind::DirectTerm,
    ArmKind::ExpandThenRelevance};

std::string_view to_string(ArmKind kind);

inline constexpr std::uint64_t kMaxDrawsPerAccepted = 10'000;
inline constexpr std::uint64_t kMaxDocumentsPerArm = 1'000'000'000'000ULL;

using ModelParams = std::variant<ClassicalParams, QuantumParams>;

struct SimConfig {
    ModelParams model;
    std::uint64_t n_per_arm = 1;
    std::uint64_t seed = 0;
};

struct ArmRun {
    std::optional<ArmCounts> counts;  // empty when the arm starved
    std::uint64_t draws_consumed = 0;

    bool starved() const noexcept { return !counts.has_value(); }
};

// An empirical statistic that may fail to exist for this run.
struct EmpiricalValue {
    std::optional<EstimateWithError> value;
    std::optional<ErrorKind> failure;

    bool defined() const noexcept { return value.has_value(); }
};

struct SimResult {
    SimConfig config;
    std::array<ArmRun, 4> arms;
    ArmCounts baseline{0, 0};

    std::optional<RateTriple> rates;  // empty when an accardi arm starved
    EmpiricalValue accardi;
    EmpiricalValue boost;

    const ArmRun& arm(ArmKind kind) const { return arms[static_cast<std::size_t>(kind)]; }

    // Throws ArmStarvation for a starved arm.
    const ArmCounts& counts(ArmKind kind) const;

    EstimateWithError baseline_relevance() const { return estimate_rate(baseline); }
};

// Single arm; throws ArmStarvation when the cutoff is hit.
ArmCounts simulate_arm(const ModelParams& model, ArmKind kind, std::uint64_t n_per_arm,
                       std::uint64_t seed, std::uint64_t* draws_consumed = nullptr);

ArmCounts simulate_baseline(const ModelParams& model, std::uint64_t n_per_arm,
                            std::uint64_t seed);

// Starved arms are recorded in the result rather than thrown; the derived
// statistics depending on them are then flagged as ArmStarvation.
SimResult simulate(const SimConfig& config);
SimResult simulate_classical(const ClassicalParams& params, std::uint64_t n_per_arm,
                             std::uint64_t seed);
SimResult simulate_quantum(const QuantumParams& params, std::uint64_t n_per_arm,
                           std::uint64_t seed);

// Boost of the expansion arm against a baseline relevance estimate.
// Throws BoostUndefined when the baseline vanishes, ArmStarvation when the
// expansion arm starved.
EstimateWithError empirical_boost(const SimResult& result,
                                  const EstimateWithError& baseline_p_r);

// Closed-form success probability of an arm, and of the baseline.
double arm_success_probability(const ModelParams& model, ArmKind kind);
double arm_acceptance_probability(const ModelParams& model, ArmKind kind);
double baseline_relevance_probability(const ModelParams& model);

}  // namespace qboost
