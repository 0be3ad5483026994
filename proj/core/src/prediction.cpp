#include "sehp/prediction.hpp"

#include <cmath>
#include <stdexcept>

#include "sehp/detail/math.hpp"

namespace sehp {

namespace {

// (v/beta) e^{-beta T} + (alpha/beta) sum_j e^{-beta (T - t_j)}:
// the total expected count still to come as t -> infinity. The prediction is
// then N + increment * (1 - e^{-beta (t - T)}), which pins c(T) = N exactly
// and is monotone in t.
double asymptote_increment(const SehpParams& p, const Cascade& c) {
    double tail = 0.0;
    for (double t : c.timestamps) {
        tail += detail::decaying_exp(p.beta * (c.horizon - t));
    }
    return (p.v / p.beta) * detail::decaying_exp(p.beta * c.horizon) +
           (p.alpha / p.beta) * tail;
}

}  // namespace

double predict(const SehpParams& params, const Cascade& cascade, double t) {
    validate_params(params);
    validate_cascade(cascade);
    if (!(t >= cascade.horizon)) {
        throw std::domain_error(
            "predict: time must not precede the observation end");
    }
    const double growth = -std::expm1(-params.beta * (t - cascade.horizon));
    return static_cast<double>(cascade.size()) +
           asymptote_increment(params, cascade) * growth;
}

PredictionSeries predict_series(const SehpParams& params, const Cascade& cascade,
                                std::span<const double> horizons) {
    validate_params(params);
    validate_cascade(cascade);
    for (std::size_t i = 0; i < horizons.size(); ++i) {
        if (!(horizons[i] >= cascade.horizon)) {
            throw std::domain_error(
                "predict_series: horizons must not precede the observation end");
        }
        if (i > 0 && !(horizons[i] > horizons[i - 1])) {
            throw std::domain_error(
                "predict_series: horizons must be strictly increasing");
        }
    }

    PredictionSeries series;
    series.cascade_id = cascade.id;
    series.horizons.assign(horizons.begin(), horizons.end());
    series.expected_counts.reserve(horizons.size());
    const double increment = asymptote_increment(params, cascade);
    const double n = static_cast<double>(cascade.size());
    for (double t : horizons) {
        const double growth = -std::expm1(-params.beta * (t - cascade.horizon));
        series.expected_counts.push_back(n + increment * growth);
    }
    return series;
}

}  // namespace sehp
