#pragma once

// Spin-1/2 document model restricted to real amplitudes.
//
//   query  |q> = cos(phi/2)   |R> + sin(phi/2)   |~R>
//   term   |X> = cos(alpha/2) |R> + sin(alpha/2) |~R>
//
// Both angles live in [0, pi]. Measuring X collapses a document onto |X>, so
// after term pre-selection the relevance probability is |<R|X>|^2 and no
// longer depends on phi (see posterior_quantum).
//
// The Accardi value is 1/2 (1 + cos(phi - alpha) / cos(alpha)), obtained by
// inserting the four rates into the invariant. The similar-looking
// (cos phi + cos alpha) / (2 cos alpha) is not equivalent.

#include "qboost/probability.hpp"

namespace qboost {

class QuantumParams {
public:
    // Throws InvalidArgument unless both angles lie in [0, pi].
    QuantumParams(double phi, double alpha);

    double phi() const noexcept { return phi_; }
    double alpha() const noexcept { return alpha_; }

private:
    double phi_;
    double alpha_;
};

struct QuantumRates {
    Probability p_r;
    Probability p_x_given_r;
    Probability p_x_given_n;
    Probability p_x_direct;  // X measured on |q> with no relevance check
};

QuantumRates quantum_rates(const QuantumParams& params);

// (1 + cos alpha) / 2, independent of phi.
Probability posterior_quantum(const QuantumParams& params);

// (cos alpha - cos phi) / (1 + cos phi). Throws BoostUndefined at phi = pi.
double boost_quantum(const QuantumParams& params);

// Throws AccardiUndefined at alpha = pi/2.
double accardi_quantum(const QuantumParams& params);

// P(X) measured directly minus the law-of-total-probability prediction;
// equals 1/2 sin(phi) sin(alpha).
double interference_term(const QuantumParams& params);

}  // namespace qboost
