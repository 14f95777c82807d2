#pragma once

// Urn model: documents are balls carrying a definite relevance label and a
// definite term occurrence. Belief revision is Bayesian.
//
// The boost numerator is (q_r - q_n)(1 - p), which follows from
// q_r / (q_r p + q_n (1 - p)) - 1. It is a difference, not a sum (q_r + q_n).

#include "qboost/probability.hpp"

namespace qboost {

struct ClassicalParams {
    Probability p;    // P(R)
    Probability q_r;  // P(X|R)
    Probability q_n;  // P(X|~R)
};

// P(R|X) by Bayes. Throws BoostUndefined when the marginal P(X) vanishes.
Probability posterior_bayes(const ClassicalParams& params);

// Throws BoostUndefined when P(X) or p vanishes. Zero at p = 1.
double boost_classical(const ClassicalParams& params);

// Always p, but undefined for a non-discriminating term (q_r == q_n).
double accardi_classical(const ClassicalParams& params);

// P(X) under the law of total probability.
Probability marginal_term_rate(const ClassicalParams& params);

}  // namespace qboost
