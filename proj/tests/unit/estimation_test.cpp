#include <doctest.h>

#include <cmath>

#include "../support/generators.hpp"
#include "sehp/detail/quasi_newton.hpp"
#include "sehp/estimation.hpp"
#include "sehp/likelihood.hpp"
#include "sehp/rng.hpp"
#include "sehp/simulation.hpp"

using namespace sehp;

TEST_CASE("default initialization follows the stated rule") {
    const Cascade c{"c", {1.0, 2.0, 3.0}, 4.0};
    const auto init = default_initialization(c);
    CHECK(init.beta == doctest::Approx(1.0));
    CHECK(init.v == doctest::Approx(0.75));
    CHECK(init.alpha == doctest::Approx(0.5));

    const Cascade single{"s", {2.0}, 8.0};
    const auto init_single = default_initialization(single);
    CHECK(init_single.beta == doctest::Approx(0.5));

    // all events at zero: fall back to 1 / horizon
    const Cascade degenerate{"d", {0.0, 0.0}, 5.0};
    const auto init_degenerate = default_initialization(degenerate);
    CHECK(init_degenerate.beta == doctest::Approx(0.2));
    CHECK(params_valid(init_degenerate));
}

TEST_CASE("initialization is always a valid parameter triple") {
    SplitMix64 g(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto c = testsupport::random_cascade(g, 0.7);
        if (c.size() == 0) c.timestamps.push_back(0.3 * c.horizon);
        CHECK(params_valid(default_initialization(c)));
    }
}

TEST_CASE("empty cascades are unfittable") {
    const Cascade empty{"e", {}, 5.0};
    CHECK_THROWS_AS(default_initialization(empty), FitError);
    CHECK_THROWS_AS(fit(empty), FitError);
    try {
        fit(empty);
    } catch (const FitError& e) {
        CHECK(e.kind() == FitError::Kind::unfittable);
    }
}

TEST_CASE("config validation") {
    const Cascade c{"c", {1.0}, 2.0};
    FitConfig bad;
    bad.n_restarts = 0;
    CHECK_THROWS_AS(fit(c, bad), std::invalid_argument);
    bad = FitConfig{};
    bad.gradient_tolerance = 0.0;
    CHECK_THROWS_AS(fit(c, bad), std::invalid_argument);
}

TEST_CASE("single-event cascade fits and improves on every restart start") {
    const Cascade c{"one", {1.0}, 2.0};
    const FitConfig config;
    const auto result = fit(c, config);
    CHECK(result.converged);
    CHECK(params_valid(result.params));
    CHECK(std::isfinite(result.log_likelihood));
    CHECK(result.gradient_norm <= config.gradient_tolerance);

    // the returned likelihood dominates the likelihood at every restart's
    // perturbed starting point
    const auto base = default_initialization(c);
    for (std::size_t k = 0; k < config.n_restarts; ++k) {
        SplitMix64 stream(derive_seed(config.seed, c.id, k));
        SehpParams start;
        start.v = base.v * std::exp(2.0 * stream.uniform01() - 1.0);
        start.alpha = base.alpha * std::exp(2.0 * stream.uniform01() - 1.0);
        start.beta = base.beta * std::exp(2.0 * stream.uniform01() - 1.0);
        CHECK(result.log_likelihood >= log_likelihood(start, c).value);
    }
}

TEST_CASE("fitting is deterministic") {
    SimConfig sim;
    sim.params = SehpParams{8.0, 0.5, 1.0};
    sim.horizon = 20.0;
    sim.seed = 99;
    const auto cascade = simulate(sim).cascade;
    REQUIRE(cascade.size() > 0);

    const auto a = fit(cascade);
    const auto b = fit(cascade);
    CHECK(a.params.v == b.params.v);
    CHECK(a.params.alpha == b.params.alpha);
    CHECK(a.params.beta == b.params.beta);
    CHECK(a.log_likelihood == b.log_likelihood);
    CHECK(a.iterations == b.iterations);
    CHECK(a.restart_index == b.restart_index);
}

TEST_CASE("accepted iterates never decrease the objective") {
    SplitMix64 g(83);
    for (int trial = 0; trial < 10; ++trial) {
        SimConfig sim;
        sim.params = SehpParams{6.0, 0.4, 0.9};
        sim.horizon = 25.0;
        sim.seed = 1000 + static_cast<std::uint64_t>(trial);
        const auto cascade = simulate(sim).cascade;
        if (cascade.size() == 0) continue;

        const auto objective =
            [&](const detail::Vec3& theta) -> std::optional<detail::ObjectiveValue> {
            const SehpParams p{std::exp(theta[0]), std::exp(theta[1]),
                               std::exp(theta[2])};
            const auto ll = log_likelihood(p, cascade);
            detail::ObjectiveValue value;
            value.value = ll.value;
            value.gradient = {ll.gradient[0] * p.v, ll.gradient[1] * p.alpha,
                              ll.gradient[2] * p.beta};
            return value;
        };
        const auto init = default_initialization(cascade);
        const detail::Vec3 start{std::log(init.v) + g.uniform01() - 0.5,
                                 std::log(init.alpha) + g.uniform01() - 0.5,
                                 std::log(init.beta) + g.uniform01() - 0.5};
        std::vector<double> trace;
        const auto result = detail::maximize(objective, start, {}, &trace);
        REQUIRE(result.evaluable);
        REQUIRE(trace.size() >= 1);
        for (std::size_t i = 1; i < trace.size(); ++i) {
            CHECK(trace[i] >= trace[i - 1]);
            CHECK(std::isfinite(trace[i]));
        }
    }
}

TEST_CASE("fitted likelihood is at least the truth's likelihood") {
    // MLE optimality on the realized sample, up to optimizer slack
    const SehpParams truth{10.0, 0.5, 1.0};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SimConfig sim;
        sim.params = truth;
        sim.horizon = 30.0;
        sim.seed = seed;
        const auto cascade = simulate(sim).cascade;
        if (cascade.size() == 0) continue;
        const auto result = fit(cascade);
        const double at_truth = log_likelihood(truth, cascade).value;
        CHECK(result.log_likelihood >= at_truth - 1e-6);
    }
}

TEST_CASE("converged fits satisfy the gradient tolerance") {
    SimConfig sim;
    sim.params = SehpParams{12.0, 0.6, 1.2};
    sim.horizon = 25.0;
    sim.seed = 4321;
    const auto cascade = simulate(sim).cascade;
    FitConfig config;
    config.gradient_tolerance = 1e-8;
    const auto result = fit(cascade, config);
    if (result.converged) {
        CHECK(result.gradient_norm <= config.gradient_tolerance);
    }
    CHECK(result.iterations <= config.max_iterations);
}
