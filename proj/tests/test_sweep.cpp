#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qboost/sweep.hpp"

using namespace qboost;
using std::numbers::pi;

TEST_CASE("eval_point analytic") {
    const auto c = eval_point(ClassicalParams{Probability(0.5), Probability(0.8), Probability(0.2)},
                              Mode::Analytic, 1, 0);
    CHECK(c.model() == ModelKind::Classical);
    CHECK(c.accardi_defined);
    CHECK(c.boost_defined);
    CHECK(c.a == doctest::Approx(0.5));
    CHECK(c.delta == doctest::Approx(0.6));

    const auto q = eval_point(QuantumParams(pi / 3, pi / 4), Mode::Analytic, 1, 0);
    CHECK(q.model() == ModelKind::Quantum);
    CHECK(q.a == doctest::Approx(1.183013).epsilon(1e-6));
    CHECK(q.delta == doctest::Approx(0.138071).epsilon(1e-5));

    const auto singular = eval_point(QuantumParams(pi / 2, pi / 2), Mode::Analytic, 1, 0);
    CHECK_FALSE(singular.accardi_defined);
    CHECK(singular.boost_defined);
    CHECK(std::isnan(singular.a));
}

TEST_CASE("exclusion margin flags near-singular points") {
    const QuantumParams near(1.0, pi / 2 - 1e-7);
    CHECK_FALSE(eval_point(near, Mode::Analytic, 1, 0, 1e-6).accardi_defined);
    CHECK(eval_point(near, Mode::Analytic, 1, 0, 0.0).accardi_defined);

    const ClassicalParams close{Probability(0.5), Probability(0.3), Probability(0.3 + 5e-7)};
    CHECK_FALSE(eval_point(close, Mode::Analytic, 1, 0).accardi_defined);
    CHECK(eval_point(close, Mode::Analytic, 1, 0).boost_defined);

    const ClassicalParams rare{Probability(5e-7), Probability(0.3), Probability(0.6)};
    CHECK_FALSE(eval_point(rare, Mode::Analytic, 1, 0).boost_defined);
}

TEST_CASE("validate rejects bad configurations") {
    SweepConfig config;
    config.n_points = 0;
    CHECK_THROWS_AS(validate(config), InvalidArgument);
    config = {};
    config.exclusion_margin = 0.5;
    CHECK_THROWS_AS(validate(config), InvalidArgument);
    config = {};
    config.exclusion_margin = -1.0;
    CHECK_THROWS_AS(validate(config), InvalidArgument);
    config = {};
    config.model = ModelKind::Empirical;
    CHECK_THROWS_AS(validate(config), InvalidArgument);
    config = {};
    config.mode = Mode::MonteCarlo;
    config.n_per_arm = 0;
    CHECK_THROWS_AS(validate(config), InvalidArgument);
}

TEST_CASE("classical analytic sweep stays inside [0,1]") {
    SweepConfig config;
    config.model = ModelKind::Classical;
    config.n_points = 10000;
    config.seed = 3;
    const auto result = sweep(config);
    REQUIRE(result.points.size() == 10000);
    for (const auto& pt : result.points) {
        if (!pt.accardi_defined) continue;
        const auto& c = std::get<ClassicalParams>(pt.params);
        REQUIRE(pt.a == c.p.value());
        REQUIRE(pt.a >= 0.0);
        REQUIRE(pt.a <= 1.0);
    }
    CHECK(result.summary.fraction_a_below_0 == 0.0);
    CHECK(result.summary.fraction_a_above_1 == 0.0);
    CHECK_FALSE(result.summary.max_delta_violation.has_value());
}

TEST_CASE("quantum analytic sweeps violate the classical bound on both sides") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SweepConfig config;
        config.model = ModelKind::Quantum;
        config.n_points = 1000;
        config.seed = seed;
        const auto s = sweep(config).summary;
        CHECK(s.fraction_a_above_1 > 0.0);
        CHECK(s.fraction_a_below_0 > 0.0);
    }
}

TEST_CASE("sweep results do not depend on the thread count") {
    SweepConfig config;
    config.model = ModelKind::Quantum;
    config.n_points = 300;
    config.seed = 41;
    config.mode = Mode::MonteCarlo;
    config.n_per_arm = 200;
    config.threads = 1;
    const auto serial = sweep(config);
    config.threads = 4;
    const auto parallel = sweep(config);
    for (std::size_t i = 0; i < serial.points.size(); ++i) {
        const auto& a = serial.points[i];
        const auto& b = parallel.points[i];
        REQUIRE(a.accardi_defined == b.accardi_defined);
        REQUIRE(a.boost_defined == b.boost_defined);
        if (a.accardi_defined) REQUIRE(a.a == b.a);
        if (a.boost_defined) REQUIRE(a.delta == b.delta);
    }
}

TEST_CASE("single-point sweep: Monte Carlo agrees with the closed forms") {
    for (const ModelKind model : {ModelKind::Classical, ModelKind::Quantum}) {
        SweepConfig config;
        config.model = model;
        config.n_points = 1;
        config.seed = 1234;
        const auto analytic = sweep(config).points.at(0);
        config.mode = Mode::MonteCarlo;
        config.n_per_arm = 100000;
        const auto mc = sweep(config).points.at(0);
        REQUIRE(analytic.accardi_defined);
        REQUIRE(mc.accardi_defined);
        CHECK(std::abs(mc.a - analytic.a) <= 4 * mc.a_std_error);
        CHECK(std::abs(mc.delta - analytic.delta) <= 4 * mc.delta_std_error);
    }
}

TEST_CASE("summarize") {
    std::vector<ScatterPoint> points;
    auto add = [&](double a, double delta, bool ad = true, bool bd = true) {
        ScatterPoint pt{QuantumParams(1.0, 1.0)};
        pt.a = a;
        pt.delta = delta;
        pt.accardi_defined = ad;
        pt.boost_defined = bd;
        points.push_back(pt);
    };
    add(0.5, 1.0);
    add(-0.2, 3.0);
    add(1.5, 2.0);
    add(1.0, 0.5);
    add(7.0, 9.0, false, true);
    const auto s = summarize(points);
    CHECK(s.n_points == 5);
    CHECK(s.n_defined == 4);
    CHECK(s.fraction_a_below_0 == 0.25);
    CHECK(s.fraction_a_above_1 == 0.25);
    CHECK(*s.max_delta == 3.0);
    CHECK(*s.max_delta_classical_region == 1.0);
    CHECK(*s.max_delta_violation == 3.0);

    const auto empty = summarize({});
    CHECK(empty.n_defined == 0);
    CHECK_FALSE(empty.max_delta.has_value());
}
