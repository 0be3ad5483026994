#include "sehp/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sehp/detail/math.hpp"

namespace sehp {

IntensityContext make_context(const SehpParams& params, const Cascade& cascade) {
    validate_params(params);
    validate_cascade(cascade);
    return IntensityContext{params, std::span<const double>(cascade.timestamps)};
}

double rate(const IntensityContext& ctx, double t) {
    if (!(t >= 0.0)) {
        throw std::domain_error("rate: time must be non-negative");
    }
    const auto& p = ctx.params;
    double value = p.v * detail::decaying_exp(p.beta * t);
    // events strictly before t excite the rate
    const auto end =
        std::lower_bound(ctx.events.begin(), ctx.events.end(), t);
    for (auto it = ctx.events.begin(); it != end; ++it) {
        value += p.alpha * detail::decaying_exp(p.beta * (t - *it));
    }
    return value;
}

double compensator(const IntensityContext& ctx, double a, double b) {
    if (!(0.0 <= a && a <= b)) {
        throw std::domain_error("compensator: require 0 <= a <= b");
    }
    const auto& p = ctx.params;
    const double inv_beta = 1.0 / p.beta;
    // differences of nearby exponentials are factored through expm1 of the
    // interval width, which stays accurate as beta * width -> 0
    double total = p.v * inv_beta * detail::decaying_exp(p.beta * a) *
                   (-std::expm1(-p.beta * (b - a)));
    // each event before b contributes its decayed mass on [max(a, t_j), b]
    double excitation = 0.0;
    const auto end = std::lower_bound(ctx.events.begin(), ctx.events.end(), b);
    for (auto it = ctx.events.begin(); it != end; ++it) {
        const double start = std::max(a, *it);
        excitation += detail::decaying_exp(p.beta * (start - *it)) *
                      (-std::expm1(-p.beta * (b - start)));
    }
    return total + p.alpha * inv_beta * excitation;
}

}  // namespace sehp
