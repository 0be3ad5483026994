#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sehp {

// Parameter triple of the self-excited process: v is the initial triggering
// strength (events/second at t = 0), alpha the intensity jump contributed by
// each forwarding, beta the exponential decay rate shared by both terms.
struct SehpParams {
    double v = 1.0;
    double alpha = 0.0;
    double beta = 1.0;
};

bool params_valid(const SehpParams& p) noexcept;
void validate_params(const SehpParams& p);  // throws std::invalid_argument

// One item's forwarding history. Timestamps are seconds relative to the
// posting time t = 0, sorted non-decreasing, all within [0, horizon].
// An empty timestamp list is a valid cascade.
struct Cascade {
    std::string id;
    std::vector<double> timestamps;
    double horizon = 0.0;

    std::size_t size() const noexcept { return timestamps.size(); }

    // number of events with timestamp <= t
    std::size_t count_at(double t) const noexcept;

    // copy restricted to events <= train_t, with horizon clipped to train_t
    Cascade truncated(double train_t) const;
};

bool cascade_valid(const Cascade& c) noexcept;
void validate_cascade(const Cascade& c);  // throws std::invalid_argument

// Dataset selection thresholds: keep a cascade iff it has strictly more than
// min_early events at times <= early_window and strictly more than min_total
// events at times <= total_window.
struct FilterCriteria {
    double early_window = 3600.0;
    std::size_t min_early = 10;
    double total_window = 172800.0;
    std::size_t min_total = 100;
};

void validate_criteria(const FilterCriteria& c);

}  // namespace sehp
