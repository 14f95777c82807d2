#include "qboost/classical_model.hpp"

#include <algorithm>
#include <cmath>

namespace qboost {

Probability marginal_term_rate(const ClassicalParams& params) {
    return total_probability(params.q_r, params.q_n, params.p);
}

Probability posterior_bayes(const ClassicalParams& params) {
    const double joint = params.q_r.value() * params.p.value();
    const double marginal = joint + params.q_n.value() * (1.0 - params.p.value());
    if (marginal < kDenominatorEpsilon) {
        throw BoostUndefined("term never occurs: P(X) vanishes");
    }
    return Probability(std::min(joint / marginal, 1.0));
}

double boost_classical(const ClassicalParams& params) {
    const double p = params.p.value();
    const double q_r = params.q_r.value();
    const double q_n = params.q_n.value();
    const double marginal = q_r * p + q_n * (1.0 - p);
    if (marginal < kDenominatorEpsilon) {
        throw BoostUndefined("term never occurs: P(X) vanishes");
    }
    if (p < kDenominatorEpsilon) {
        throw BoostUndefined("P(R) vanishes");
    }
    return (q_r - q_n) * (1.0 - p) / marginal;
}

double accardi_classical(const ClassicalParams& params) {
    if (std::abs(params.q_r.value() - params.q_n.value()) < kDenominatorEpsilon) {
        throw AccardiUndefined("P(X|R) and P(X|~R) coincide");
    }
    return params.p.value();
}

}  // namespace qboost
