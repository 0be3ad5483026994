#pragma once

#include <span>
#include <string>
#include <vector>

#include "sehp/types.hpp"

namespace sehp {

struct PredictionSeries {
    std::string cascade_id;
    std::vector<double> horizons;         // absolute times, strictly increasing, >= horizon
    std::vector<double> expected_counts;  // non-decreasing, first element >= N
};

// Expected forwarding count at time t >= cascade.horizon:
//   c(t) = N + (v/beta)(e^{-beta T} - e^{-beta t})
//            + (alpha/beta) sum_j (e^{-beta (T - t_j)} - e^{-beta (t - t_j)})
// with the sum over all N observed events. Future forwardings contribute no
// triggering terms of their own. c(T) = N exactly.
double predict(const SehpParams& params, const Cascade& cascade, double t);

// Element-wise predict over a strictly increasing grid of absolute times.
PredictionSeries predict_series(const SehpParams& params, const Cascade& cascade,
                                std::span<const double> horizons);

}  // namespace sehp
