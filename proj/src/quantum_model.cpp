#include "qboost/quantum_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qboost {

namespace {

// (1 + c) / 2 clamped against rounding.
Probability half_plus(double c) { return Probability(std::clamp(0.5 * (1.0 + c), 0.0, 1.0)); }

}  // namespace

QuantumParams::QuantumParams(double phi, double alpha) : phi_(phi), alpha_(alpha) {
    constexpr double pi = std::numbers::pi;
    if (!(phi >= 0.0 && phi <= pi) || !(alpha >= 0.0 && alpha <= pi)) {
        throw InvalidArgument("angles must lie in [0, pi], got phi=" + std::to_string(phi) +
                              " alpha=" + std::to_string(alpha));
    }
}

QuantumRates quantum_rates(const QuantumParams& params) {
    const double cos_alpha = std::cos(params.alpha());
    return {
        half_plus(std::cos(params.phi())),
        half_plus(cos_alpha),
        half_plus(-cos_alpha),
        half_plus(std::cos(params.phi() - params.alpha())),
    };
}

Probability posterior_quantum(const QuantumParams& params) {
    return half_plus(std::cos(params.alpha()));
}

double boost_quantum(const QuantumParams& params) {
    const double cos_phi = std::cos(params.phi());
    if (1.0 + cos_phi < kDenominatorEpsilon) {
        throw BoostUndefined("query orthogonal to relevance: P(R) vanishes");
    }
    return (std::cos(params.alpha()) - cos_phi) / (1.0 + cos_phi);
}

double accardi_quantum(const QuantumParams& params) {
    const double cos_alpha = std::cos(params.alpha());
    if (std::abs(cos_alpha) < kDenominatorEpsilon) {
        throw AccardiUndefined("term is unbiased with respect to relevance (alpha = pi/2)");
    }
    return 0.5 * (1.0 + std::cos(params.phi() - params.alpha()) / cos_alpha);
}

double interference_term(const QuantumParams& params) {
    return 0.5 * std::sin(params.phi()) * std::sin(params.alpha());
}

}  // namespace qboost
