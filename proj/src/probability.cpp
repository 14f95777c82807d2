#include "qboost/probability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qboost {

Probability::Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InvalidArgument("probability out of [0,1]: " + std::to_string(value));
    }
}

Probability Probability::complement() const noexcept {
    Probability p = *this;
    p.value_ = 1.0 - value_;
    return p;
}

ArmCounts::ArmCounts(std::uint64_t n_total, std::uint64_t n_success)
    : n_total_(n_total), n_success_(n_success) {
    if (n_success > n_total) {
        throw InvalidArgument("arm has more successes than observations");
    }
}

double accardi(const RateTriple& rates) {
    const double denom = rates.p_x_given_r.value() - rates.p_x_given_n.value();
    if (std::abs(denom) < kDenominatorEpsilon) {
        throw AccardiUndefined("P(X|R) and P(X|~R) coincide");
    }
    return (rates.p_x.value() - rates.p_x_given_n.value()) / denom;
}

double boost(Probability p_r_given_x, Probability p_r) {
    if (p_r.value() < kDenominatorEpsilon) {
        throw BoostUndefined("P(R) vanishes");
    }
    return (p_r_given_x.value() - p_r.value()) / p_r.value();
}

Probability total_probability(Probability p_x_given_r, Probability p_x_given_n,
                              Probability p_r) {
    const double p = p_r.value();
    const double mixed = p_x_given_r.value() * p + p_x_given_n.value() * (1.0 - p);
    // Convex combination; only rounding can push it past the ends.
    return Probability(std::clamp(mixed, 0.0, 1.0));
}

EstimateWithError estimate_rate(const ArmCounts& counts) {
    if (counts.n_total() == 0) {
        throw EmptyArm("no documents observed in arm");
    }
    const auto n = static_cast<double>(counts.n_total());
    const double p = static_cast<double>(counts.n_success()) / n;
    return {p, std::sqrt(p * (1.0 - p) / n), counts.n_total()};
}

EstimateWithError accardi_from_estimates(const EstimateWithError& x_given_r,
                                         const EstimateWithError& x_given_n,
                                         const EstimateWithError& x_direct) {
    const double r = x_given_r.estimate;
    const double nr = x_given_n.estimate;
    const double x = x_direct.estimate;
    const double a = accardi({Probability(r), Probability(nr), Probability(x)});

    const double denom = r - nr;
    const double d_x = 1.0 / denom;
    const double d_r = -(x - nr) / (denom * denom);
    const double d_nr = (x - r) / (denom * denom);
    const double var = d_x * d_x * x_direct.std_error * x_direct.std_error +
                       d_r * d_r * x_given_r.std_error * x_given_r.std_error +
                       d_nr * d_nr * x_given_n.std_error * x_given_n.std_error;
    return {a, std::sqrt(var), std::min({x_given_r.n, x_given_n.n, x_direct.n})};
}

EstimateWithError accardi_from_counts(const ArmCounts& arm_r, const ArmCounts& arm_n,
                                      const ArmCounts& arm_direct) {
    return accardi_from_estimates(estimate_rate(arm_r), estimate_rate(arm_n),
                                  estimate_rate(arm_direct));
}

EstimateWithError boost_from_estimates(const EstimateWithError& r_given_x,
                                       const EstimateWithError& r_baseline) {
    const double b = r_baseline.estimate;
    const double e = r_given_x.estimate;
    const double delta = boost(Probability(e), Probability(b));
    const double d_e = 1.0 / b;
    const double d_b = -e / (b * b);
    const double var = d_e * d_e * r_given_x.std_error * r_given_x.std_error +
                       d_b * d_b * r_baseline.std_error * r_baseline.std_error;
    return {delta, std::sqrt(var), std::min(r_given_x.n, r_baseline.n)};
}

}  // namespace qboost
