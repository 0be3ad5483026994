#include "sehp/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sehp {

bool params_valid(const SehpParams& p) noexcept {
    return std::isfinite(p.v) && std::isfinite(p.alpha) && std::isfinite(p.beta) &&
           p.v > 0.0 && p.alpha >= 0.0 && p.beta > 0.0;
}

void validate_params(const SehpParams& p) {
    if (!params_valid(p)) {
        throw std::invalid_argument(
            "invalid parameters: require finite v > 0, alpha >= 0, beta > 0");
    }
}

std::size_t Cascade::count_at(double t) const noexcept {
    return static_cast<std::size_t>(
        std::upper_bound(timestamps.begin(), timestamps.end(), t) -
        timestamps.begin());
}

Cascade Cascade::truncated(double train_t) const {
    Cascade out;
    out.id = id;
    out.horizon = std::min(horizon, train_t);
    const std::size_t n = count_at(train_t);
    out.timestamps.assign(timestamps.begin(), timestamps.begin() + n);
    return out;
}

bool cascade_valid(const Cascade& c) noexcept {
    if (!(std::isfinite(c.horizon) && c.horizon > 0.0)) return false;
    if (!std::is_sorted(c.timestamps.begin(), c.timestamps.end())) return false;
    for (double t : c.timestamps) {
        if (!(std::isfinite(t) && t >= 0.0 && t <= c.horizon)) return false;
    }
    return true;
}

void validate_cascade(const Cascade& c) {
    if (!cascade_valid(c)) {
        throw std::invalid_argument(
            "invalid cascade '" + c.id +
            "': require horizon > 0 and sorted timestamps within [0, horizon]");
    }
}

void validate_criteria(const FilterCriteria& c) {
    if (!(std::isfinite(c.early_window) && std::isfinite(c.total_window)) ||
        c.early_window < 0.0 || c.total_window < 0.0 ||
        c.early_window > c.total_window) {
        throw std::invalid_argument(
            "invalid filter criteria: require 0 <= early_window <= total_window");
    }
}

}  // namespace sehp
