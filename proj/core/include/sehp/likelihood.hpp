#pragma once

#include <array>

#include "sehp/types.hpp"

namespace sehp {

struct LogLikResult {
    double value = 0.0;
    // partial derivatives with respect to (v, alpha, beta)
    std::array<double, 3> gradient{0.0, 0.0, 0.0};
};

// Closed-form log-likelihood of a cascade with its analytic gradient,
// computed in a single O(N) pass over the events. The excitation sum at event
// i runs over indices j < i; a tied earlier event contributes weight 1.
// Throws std::runtime_error if the intensity vanishes at an event (possible
// only under invariant violations or deep exponential underflow).
LogLikResult log_likelihood(const SehpParams& params, const Cascade& cascade);

// Slow reference path: the same log-likelihood assembled from per-interval
// survival terms, with every intensity integral evaluated by adaptive
// numerical quadrature over a directly-summed rate. Exists to cross-check
// log_likelihood and is never called by the optimizer.
double log_likelihood_quadrature(const SehpParams& params, const Cascade& cascade);

}  // namespace sehp
