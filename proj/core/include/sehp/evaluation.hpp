#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sehp/types.hpp"

namespace sehp {

inline constexpr double kDefaultEpsilon = 0.2;

// Mean absolute percentage error (1/M) sum |c_i - r_i| / r_i. Every actual
// value must be strictly positive.
double mape(std::span<const double> predicted, std::span<const double> actual);

// Fraction of items with |c_i - r_i| / r_i <= epsilon; the comparison is
// non-strict, so an error of exactly epsilon counts as correct.
double accuracy(std::span<const double> predicted, std::span<const double> actual,
                double epsilon);

struct HorizonReport {
    double horizon_seconds = 0.0;  // offset from the training end
    std::size_t n_items = 0;
    std::size_t n_skipped = 0;  // items with zero actual popularity at this horizon
    // absent when no item was usable at this horizon
    std::optional<double> mape;
    std::optional<double> accuracy;
};

// Truncate-then-compare sweep: params[i] was fitted on cascades[i] truncated
// at train_t; predictions come from the truncated record, actual popularity
// from the full record. offsets are seconds past train_t, sorted strictly
// increasing; every cascade must extend to train_t + offsets.back(). Items
// whose actual count is zero at a horizon are skipped and counted.
std::vector<HorizonReport> horizon_sweep(std::span<const Cascade> cascades,
                                         std::span<const SehpParams> params,
                                         double train_t,
                                         std::span<const double> offsets,
                                         double epsilon = kDefaultEpsilon);

}  // namespace sehp
