#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "sehp/types.hpp"

namespace sehp {

struct FitConfig {
    std::size_t max_iterations = 500;
    // convergence threshold on the infinity norm of the gradient in
    // log-parameter space
    double gradient_tolerance = 1e-6;
    std::size_t n_restarts = 4;
    std::uint64_t seed = 0;
};

struct FitResult {
    SehpParams params;
    double log_likelihood = 0.0;
    double gradient_norm = 0.0;  // final infinity norm, log-parameter space
    std::size_t iterations = 0;
    bool converged = false;
    std::size_t restart_index = 0;  // which restart produced this result
};

class FitError : public std::runtime_error {
public:
    enum class Kind {
        unfittable,  // cascade has no events
        diverged,    // no restart produced a finite objective
    };

    FitError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Starting point for the optimizer: beta from the mean inter-event gap
// (measured over t_0 = 0, t_1 .. t_N, with 1/horizon as fallback when the
// gaps are all zero), v = N / horizon, alpha at branching ratio 0.5.
SehpParams default_initialization(const Cascade& cascade);

// Maximum-likelihood fit of (v, alpha, beta) by quasi-Newton ascent over
// (log v, log alpha, log beta), restarted n_restarts times from
// multiplicative perturbations of the default initialization. Returns the
// restart with the highest final log-likelihood. Deterministic given
// (cascade, config). Throws FitError for empty cascades or when every
// restart fails to produce a finite objective.
FitResult fit(const Cascade& cascade, const FitConfig& config = {});

}  // namespace sehp
