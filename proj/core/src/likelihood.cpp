#include "sehp/likelihood.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sehp/detail/math.hpp"

namespace sehp {

// Single pass over the events maintaining two recursive accumulators:
//   S_i = sum_{j<i} e^{-beta (t_i - t_j)}
//   R_i = sum_{j<i} (t_i - t_j) e^{-beta (t_i - t_j)}   (= -dS_i/dbeta)
// updated by S_i = d (S_{i-1} + 1), R_i = d (R_{i-1} + gap (S_{i-1} + 1))
// with d = e^{-beta gap}, so the full evaluation is O(N).
LogLikResult log_likelihood(const SehpParams& params, const Cascade& cascade) {
    validate_params(params);
    validate_cascade(cascade);

    const double v = params.v;
    const double alpha = params.alpha;
    const double beta = params.beta;
    const double horizon = cascade.horizon;
    const auto& ts = cascade.timestamps;

    const double horizon_decay = detail::decaying_exp(beta * horizon);
    // e^{-x} - 1 terms go through expm1: at small beta the naive difference
    // rounds to zero and silently deletes the compensator part
    const double horizon_decay_m1 = std::expm1(-beta * horizon);

    double tail_sum = 0.0;        // sum_i (e^{-beta (T - t_i)} - 1)
    double tail_weighted = 0.0;   // sum_i (T - t_i) e^{-beta (T - t_i)}
    double log_sum = 0.0;         // sum_i log lambda_i
    double grad_v_events = 0.0;   // sum_i e^{-beta t_i} / lambda_i
    double grad_a_events = 0.0;   // sum_i S_i / lambda_i
    double grad_b_events = 0.0;   // sum_i (dlambda_i/dbeta) / lambda_i

    double excitation = 0.0;  // S_i
    double weighted = 0.0;    // R_i
    double prev = 0.0;

    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double t = ts[i];
        if (i > 0) {
            const double gap = t - prev;
            const double decay = detail::decaying_exp(beta * gap);
            weighted = decay * (weighted + gap * (excitation + 1.0));
            excitation = decay * (excitation + 1.0);
        }
        prev = t;

        const double background = detail::decaying_exp(beta * t);
        const double lambda = v * background + alpha * excitation;
        if (!(lambda > 0.0)) {
            throw std::runtime_error(
                "log_likelihood: intensity vanished at event index " +
                std::to_string(i));
        }
        log_sum += std::log(lambda);
        grad_v_events += background / lambda;
        grad_a_events += excitation / lambda;
        grad_b_events += (-v * t * background - alpha * weighted) / lambda;

        tail_sum += std::expm1(-beta * (horizon - t));
        tail_weighted += (horizon - t) * detail::decaying_exp(beta * (horizon - t));
    }

    LogLikResult out;
    out.value = (v / beta) * horizon_decay_m1 + (alpha / beta) * tail_sum + log_sum;
    out.gradient[0] = horizon_decay_m1 / beta + grad_v_events;
    out.gradient[1] = tail_sum / beta + grad_a_events;
    out.gradient[2] = -(v / (beta * beta)) * horizon_decay_m1 -
                      (v * horizon / beta) * horizon_decay -
                      (alpha / (beta * beta)) * tail_sum -
                      (alpha / beta) * tail_weighted + grad_b_events;
    return out;
}

}  // namespace sehp
