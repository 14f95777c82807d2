#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's closed forms.

#include <array>
#include <cmath>
#include <cstdint>

namespace oracle {

// Finite urn with explicit ball counts. Every probability is a ratio of
// counted balls.
struct Urn {
    std::int64_t relevant_with_term;
    std::int64_t relevant_without_term;
    std::int64_t other_with_term;
    std::int64_t other_without_term;

    std::int64_t total() const {
        return relevant_with_term + relevant_without_term + other_with_term + other_without_term;
    }
    std::int64_t relevant() const { return relevant_with_term + relevant_without_term; }
    std::int64_t with_term() const { return relevant_with_term + other_with_term; }

    double p() const { return double(relevant()) / double(total()); }
    double q_r() const { return double(relevant_with_term) / double(relevant()); }
    double q_n() const { return double(other_with_term) / double(total() - relevant()); }
    double p_x() const { return double(with_term()) / double(total()); }
    double posterior() const { return double(relevant_with_term) / double(with_term()); }
    double boost() const { return (posterior() - p()) / p(); }
};

using Vec2 = std::array<double, 2>;

inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

inline Vec2 ket(double angle) { return {std::cos(angle / 2), std::sin(angle / 2)}; }

inline const Vec2 kRelevant{1.0, 0.0};
inline const Vec2 kNonRelevant{0.0, 1.0};

// Born rule for a projective yes/no measurement onto `property`.
inline double born(const Vec2& state, const Vec2& property) {
    const double amp = dot(state, property);
    return amp * amp;
}

// Probability that measuring `first` then `second` on `state` yields yes
// twice, divided by the probability of the first yes: the conditional rate
// an arm that keeps only first-yes documents would tally. After the first
// yes the state is the normalized projection onto `first`.
inline double sequential_conditional(const Vec2& state, const Vec2& first, const Vec2& second) {
    const double amp = dot(state, first);
    Vec2 collapsed{amp * first[0], amp * first[1]};
    const double norm = std::sqrt(dot(collapsed, collapsed));
    collapsed = {collapsed[0] / norm, collapsed[1] / norm};
    return born(collapsed, second);
}

// Rates of the spin-1/2 model from state vectors.
struct SpinRates {
    double p_r;
    double x_given_r;
    double x_given_n;
    double x_direct;
    double r_given_x;
};

inline SpinRates spin_rates(double phi, double alpha) {
    const Vec2 q = ket(phi);
    const Vec2 x = ket(alpha);
    return {born(q, kRelevant), sequential_conditional(q, kRelevant, x),
            sequential_conditional(q, kNonRelevant, x), born(q, x),
            sequential_conditional(q, x, kRelevant)};
}

}  // namespace oracle
