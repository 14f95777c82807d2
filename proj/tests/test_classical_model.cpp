#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qboost/classical_model.hpp"

using namespace qboost;

namespace {

ClassicalParams params(double p, double q_r, double q_n) {
    return {Probability(p), Probability(q_r), Probability(q_n)};
}

}  // namespace

TEST_CASE("posterior_bayes") {
    CHECK(posterior_bayes(params(0.5, 0.8, 0.2)).value() == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(posterior_bayes(params(1.0, 0.3, 0.9)).value() == 1.0);
    CHECK(posterior_bayes(params(1.0, 1e-3, 0.0)).value() == 1.0);
    CHECK_THROWS_AS(posterior_bayes(params(0.5, 0.0, 0.0)), BoostUndefined);
}

TEST_CASE("boost_classical") {
    CHECK(boost_classical(params(0.5, 0.8, 0.2)) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(boost_classical(params(0.5, 0.2, 0.8)) == doctest::Approx(-0.6).epsilon(1e-15));
    for (double p : {0.01, 0.5, 0.99}) {
        CHECK(boost_classical(params(p, 0.42, 0.42)) == 0.0);
    }
    SUBCASE("p = 1 is already at full precision") {
        CHECK(boost_classical(params(1.0, 0.3, 0.7)) == 0.0);
    }
    CHECK_THROWS_AS(boost_classical(params(0.0, 0.5, 0.5)), BoostUndefined);
    CHECK_THROWS_AS(boost_classical(params(0.5, 0.0, 0.0)), BoostUndefined);
}

TEST_CASE("accardi_classical") {
    CHECK(accardi_classical(params(0.3, 0.9, 0.1)) == 0.3);
    CHECK(accardi_classical(params(0.0, 1.0, 0.0)) == 0.0);
    CHECK_THROWS_AS(accardi_classical(params(0.5, 0.5, 0.5)), AccardiUndefined);
}

TEST_CASE("urn enumeration agrees with the closed forms") {
    // Every urn with up to 9 balls per cell.
    int checked = 0;
    for (int rx = 0; rx < 10; ++rx)
        for (int rn = 0; rn < 10; ++rn)
            for (int ox = 0; ox < 10; ++ox)
                for (int on = 0; on < 10; ++on) {
                    const oracle::Urn urn{rx, rn, ox, on};
                    if (urn.relevant() == 0 || urn.relevant() == urn.total() ||
                        urn.with_term() == 0) {
                        continue;
                    }
                    const auto cp = params(urn.p(), urn.q_r(), urn.q_n());
                    REQUIRE(marginal_term_rate(cp).value() == doctest::Approx(urn.p_x()).epsilon(1e-14));
                    REQUIRE(posterior_bayes(cp).value() ==
                            doctest::Approx(urn.posterior()).epsilon(1e-14));
                    REQUIRE(boost_classical(cp) == doctest::Approx(urn.boost()).epsilon(1e-13));
                    if (urn.q_r() != urn.q_n()) {
                        const RateTriple rates{cp.q_r, cp.q_n, Probability(urn.p_x())};
                        REQUIRE(accardi(rates) == doctest::Approx(accardi_classical(cp)).epsilon(1e-12));
                    }
                    ++checked;
                }
    CHECK(checked > 8000);
}

TEST_CASE("classical invariants over random parameters") {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100000; ++i) {
        const auto cp = params(u(gen), u(gen), u(gen));
        const double p = cp.p.value(), q_r = cp.q_r.value(), q_n = cp.q_n.value();

        const double a = accardi_classical(cp);
        REQUIRE(a >= 0.0);
        REQUIRE(a <= 1.0);

        const double delta = boost_classical(cp);
        const double via_posterior = boost(posterior_bayes(cp), cp.p);
        REQUIRE(std::abs(delta - via_posterior) <= 1e-12 * std::max(1.0, std::abs(delta)));

        if (q_r > q_n) REQUIRE(delta > 0.0);
        if (q_r < q_n) REQUIRE(delta < 0.0);
        (void)p;
    }
}

TEST_CASE("posterior_bayes is nondecreasing in q_r") {
    std::mt19937_64 gen(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double p = u(gen), q_n = u(gen);
        double previous = -1.0;
        for (int k = 1; k <= 50; ++k) {
            const double post = posterior_bayes(params(p, k / 50.0, q_n)).value();
            REQUIRE(post >= previous);
            previous = post;
        }
    }
}
