#pragma once

#include <span>

#include "sehp/types.hpp"

namespace sehp {

// Parameters plus the event times they act on. The context only views the
// event sequence; the underlying storage must outlive it.
struct IntensityContext {
    SehpParams params;
    std::span<const double> events;
};

// Validates params and cascade before borrowing its timestamps.
IntensityContext make_context(const SehpParams& params, const Cascade& cascade);

// Rate lambda(t) = v e^{-beta t} + alpha sum over events strictly before t of
// e^{-beta (t - t_j)}. Strictly positive for every t >= 0.
double rate(const IntensityContext& ctx, double t);

// Integral of the rate over [a, b], in closed form. Non-negative and additive
// over adjacent intervals.
double compensator(const IntensityContext& ctx, double a, double b);

}  // namespace sehp
