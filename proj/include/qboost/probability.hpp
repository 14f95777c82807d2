#pragma once

// Probability primitives shared by the classical and quantum document models:
// validated probabilities, binomial rate estimation, and the two
// model-agnostic statistics of query expansion.
//
//   boost     Delta = (P(R|X) - P(R)) / P(R)
//   accardi   A     = (P(X) - P(X|~R)) / (P(X|R) - P(X|~R))
//
// Whenever P(X) obeys the law of total probability, A collapses to P(R) and
// therefore lies in [0, 1]. A measured A outside that interval is a
// signature of non-Boolean belief revision.

#include <cstdint>
#include <optional>

#include "qboost/errors.hpp"

namespace qboost {

// Guard for every division in the library.
inline constexpr double kDenominatorEpsilon = 1e-9;

class Probability {
public:
    // Throws InvalidArgument outside [0, 1] (NaN included).
    explicit Probability(double value);

    static Probability zero() { return Probability(0.0); }
    static Probability one() { return Probability(1.0); }

    double value() const noexcept { return value_; }
    Probability complement() const noexcept;

    friend bool operator==(Probability, Probability) = default;

private:
    double value_;
};

// The three rates entering the Accardi invariant. No joint constraint:
// the quantum model breaks the law of total probability on purpose.
struct RateTriple {
    Probability p_x_given_r;
    Probability p_x_given_n;
    Probability p_x;
};

// Outcome tally of one measurement arm.
class ArmCounts {
public:
    ArmCounts(std::uint64_t n_total, std::uint64_t n_success);

    std::uint64_t n_total() const noexcept { return n_total_; }
    std::uint64_t n_success() const noexcept { return n_success_; }

    friend bool operator==(const ArmCounts&, const ArmCounts&) = default;

private:
    std::uint64_t n_total_;
    std::uint64_t n_success_;
};

struct EstimateWithError {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;

    friend bool operator==(const EstimateWithError&, const EstimateWithError&) = default;
};

double accardi(const RateTriple& rates);

double boost(Probability p_r_given_x, Probability p_r);

Probability total_probability(Probability p_x_given_r, Probability p_x_given_n,
                              Probability p_r);

// Wald estimate: p = k/n, se = sqrt(p(1-p)/n). Throws EmptyArm for n = 0.
EstimateWithError estimate_rate(const ArmCounts& counts);

// Accardi invariant of three independent arms, with first-order (delta
// method) error propagation.
EstimateWithError accardi_from_counts(const ArmCounts& arm_r, const ArmCounts& arm_n,
                                      const ArmCounts& arm_direct);

// Same propagation on already-estimated rates. `n` of the result is the
// smallest of the three sample sizes.
EstimateWithError accardi_from_estimates(const EstimateWithError& x_given_r,
                                         const EstimateWithError& x_given_n,
                                         const EstimateWithError& x_direct);

// Relative precision boost of two independent rate estimates.
EstimateWithError boost_from_estimates(const EstimateWithError& r_given_x,
                                       const EstimateWithError& r_baseline);

}  // namespace qboost
