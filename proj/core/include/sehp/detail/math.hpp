#pragma once

#include <cmath>
#include <limits>

namespace sehp::detail {

// e^{-x} for x >= 0, with results below the smallest positive normal flushed
// to zero so behavior does not depend on subnormal handling.
inline double decaying_exp(double x) noexcept {
    const double e = std::exp(-x);
    return e < std::numeric_limits<double>::min() ? 0.0 : e;
}

}  // namespace sehp::detail
