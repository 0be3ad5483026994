#include "sehp/estimation.hpp"

#include <cmath>
#include <optional>

#include "sehp/detail/quasi_newton.hpp"
#include "sehp/likelihood.hpp"
#include "sehp/rng.hpp"

namespace sehp {

namespace {

void validate_config(const FitConfig& config) {
    if (config.max_iterations < 1 || !(config.gradient_tolerance > 0.0) ||
        config.n_restarts < 1) {
        throw std::invalid_argument(
            "invalid fit config: require max_iterations >= 1, "
            "gradient_tolerance > 0, n_restarts >= 1");
    }
}

// Objective over theta = (log v, log alpha, log beta); the chain rule turns
// parameter-space partials into log-space ones.
std::optional<detail::ObjectiveValue> evaluate(const detail::Vec3& theta,
                                               const Cascade& cascade) {
    const SehpParams params{std::exp(theta[0]), std::exp(theta[1]),
                            std::exp(theta[2])};
    LogLikResult ll;
    try {
        ll = log_likelihood(params, cascade);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    detail::ObjectiveValue value;
    value.value = ll.value;
    value.gradient = {ll.gradient[0] * params.v, ll.gradient[1] * params.alpha,
                      ll.gradient[2] * params.beta};
    return value;
}

}  // namespace

SehpParams default_initialization(const Cascade& cascade) {
    validate_cascade(cascade);
    const std::size_t n = cascade.size();
    if (n == 0) {
        throw FitError(FitError::Kind::unfittable,
                       "cascade '" + cascade.id + "' has no events");
    }
    // gaps over t_0 = 0, t_1 .. t_N telescope to t_N / N
    const double mean_gap = cascade.timestamps.back() / static_cast<double>(n);
    SehpParams init;
    init.beta = mean_gap > 0.0 ? 1.0 / mean_gap : 1.0 / cascade.horizon;
    init.v = static_cast<double>(n) / cascade.horizon;
    init.alpha = 0.5 * init.beta;
    return init;
}

FitResult fit(const Cascade& cascade, const FitConfig& config) {
    validate_config(config);
    const SehpParams base = default_initialization(cascade);
    const detail::Vec3 log_base{std::log(base.v), std::log(base.alpha),
                                std::log(base.beta)};

    detail::AscentOptions options;
    options.max_iterations = config.max_iterations;
    options.gradient_tolerance = config.gradient_tolerance;

    const auto objective = [&](const detail::Vec3& theta) {
        return evaluate(theta, cascade);
    };

    std::optional<FitResult> best;
    std::size_t failed_restarts = 0;
    for (std::size_t k = 0; k < config.n_restarts; ++k) {
        SplitMix64 stream(derive_seed(config.seed, cascade.id, k));
        detail::Vec3 start;
        for (int c = 0; c < 3; ++c) {
            start[c] = log_base[c] + (2.0 * stream.uniform01() - 1.0);
        }
        const auto ascent = detail::maximize(objective, start, options);
        if (!ascent.evaluable) {
            ++failed_restarts;
            continue;
        }
        if (!best || ascent.value > best->log_likelihood) {
            FitResult result;
            result.params = SehpParams{std::exp(ascent.x[0]), std::exp(ascent.x[1]),
                                       std::exp(ascent.x[2])};
            result.log_likelihood = ascent.value;
            result.gradient_norm = ascent.gradient_norm;
            result.iterations = ascent.iterations;
            result.converged = ascent.converged;
            result.restart_index = k;
            best = result;
        }
    }
    if (!best) {
        throw FitError(FitError::Kind::diverged,
                       "fit of cascade '" + cascade.id + "' failed: objective was "
                       "non-finite at all " + std::to_string(failed_restarts) +
                       " restart initializations");
    }
    return *best;
}

}  // namespace sehp
