#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

#include "sehp/detail/math.hpp"
#include "sehp/likelihood.hpp"

namespace sehp {

namespace {

// Rate at time t with the first n_before events active, summed term by term.
// Deliberately shares no code with the accumulator path it cross-checks.
double direct_rate(const SehpParams& p, const std::vector<double>& ts,
                   std::size_t n_before, double t) {
    double value = p.v * detail::decaying_exp(p.beta * t);
    for (std::size_t j = 0; j < n_before; ++j) {
        value += p.alpha * detail::decaying_exp(p.beta * (t - ts[j]));
    }
    return value;
}

}  // namespace

double log_likelihood_quadrature(const SehpParams& params, const Cascade& cascade) {
    validate_params(params);
    validate_cascade(cascade);

    using quadrature = boost::math::quadrature::gauss_kronrod<double, 15>;
    const auto& ts = cascade.timestamps;

    // log L = sum_i [ log lambda(t_i) - int_{t_{i-1}}^{t_i} lambda ]
    //         - int_{t_N}^{T} lambda
    // On the open interval before event i exactly the first i events are
    // active, so each integrand is smooth.
    double integral = 0.0;
    double error_sum = 0.0;
    double log_part = 0.0;
    double lo = 0.0;
    // pieces never span more than a few decay scales, so the fixed-order
    // rule converges without deep refinement
    const double max_width = 5.0 / params.beta;
    for (std::size_t i = 0; i <= ts.size(); ++i) {
        const double hi = i < ts.size() ? ts[i] : cascade.horizon;
        if (hi > lo) {
            const auto pieces = static_cast<std::size_t>((hi - lo) / max_width) + 1;
            for (std::size_t p = 0; p < pieces; ++p) {
                const double a =
                    lo + (hi - lo) * static_cast<double>(p) / static_cast<double>(pieces);
                const double b =
                    lo + (hi - lo) * static_cast<double>(p + 1) / static_cast<double>(pieces);
                double err = 0.0;
                integral += quadrature::integrate(
                    [&](double t) { return direct_rate(params, ts, i, t); }, a, b,
                    10, 1e-9, &err);
                error_sum += err;
            }
        }
        if (i < ts.size()) {
            const double lambda = direct_rate(params, ts, i, ts[i]);
            if (!(lambda > 0.0)) {
                throw std::runtime_error(
                    "log_likelihood_quadrature: intensity vanished at event index " +
                    std::to_string(i));
            }
            log_part += std::log(lambda);
            lo = hi;
        }
    }
    if (!(error_sum <= 1e-10 * std::max(1.0, std::abs(integral)))) {
        throw std::runtime_error(
            "log_likelihood_quadrature: quadrature failed to converge");
    }
    return log_part - integral;
}

}  // namespace sehp
