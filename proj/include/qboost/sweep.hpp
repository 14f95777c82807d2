#pragma once

// (A, Delta) scatter data over uniformly sampled model parameters.
//
// Sampling domains: classical (p, q_r, q_n) uniform on [0,1]^3, quantum
// (phi, alpha) uniform on [0,pi]^2. Points within exclusion_margin of a
// singularity are kept with their validity flags cleared, so the sample stays
// uniform and the summary fractions stay interpretable.
//
// Point i draws its parameters from substream (seed, i, 0) and its Monte Carlo
// documents from substream (seed, i, 1). Results never depend on the thread
// count or on completion order.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qboost/stream_sim.hpp"

namespace qboost {

enum class ModelKind { Classical, Quantum, Empirical };
enum class Mode { Analytic, MonteCarlo };

std::string_view to_string(ModelKind kind);
std::string_view to_string(Mode mode);

inline constexpr double kDefaultExclusionMargin = 1e-6;

// Rates measured on an external collection; a rate whose denominator count
// is zero is missing.
struct EmpiricalRates {
    std::optional<double> p_r;
    std::optional<double> p_x_given_r;
    std::optional<double> p_x_given_n;
};

using PointParams = std::variant<ClassicalParams, QuantumParams, EmpiricalRates>;

struct ScatterPoint {
    PointParams params;
    double a = 0.0;
    double delta = 0.0;
    bool accardi_defined = false;
    bool boost_defined = false;
    // Zero for analytic points.
    double a_std_error = 0.0;
    double delta_std_error = 0.0;

    ModelKind model() const noexcept;
};

struct SweepConfig {
    ModelKind model = ModelKind::Classical;  // Classical or Quantum
    std::uint64_t n_points = 10'000;
    std::uint64_t seed = 0;
    Mode mode = Mode::Analytic;
    std::uint64_t n_per_arm = 10'000;
    double exclusion_margin = kDefaultExclusionMargin;
    unsigned threads = 0;  // 0: hardware concurrency
};

// Fractions and maxima are taken over the n_defined points that have both
// a and delta defined. "Classical region" means 0 <= a <= 1.
struct SweepSummary {
    std::uint64_t n_points = 0;
    std::uint64_t n_defined = 0;
    double fraction_a_below_0 = 0.0;
    double fraction_a_above_1 = 0.0;
    std::optional<double> max_delta;
    std::optional<double> max_delta_classical_region;
    std::optional<double> max_delta_violation;
};

struct SweepResult {
    std::vector<ScatterPoint> points;
    SweepSummary summary;
};

// Throws InvalidArgument on an invalid configuration.
void validate(const SweepConfig& config);

ModelParams sample_params(ModelKind model, std::uint64_t seed, std::uint64_t index);

ScatterPoint eval_point(const ModelParams& params, Mode mode, std::uint64_t n_per_arm,
                        std::uint64_t seed, double exclusion_margin = kDefaultExclusionMargin);

SweepSummary summarize(std::span<const ScatterPoint> points);

SweepResult sweep(const SweepConfig& config);

}  // namespace qboost
