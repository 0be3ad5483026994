#include "sehp/evaluation.hpp"

#include <cmath>
#include <stdexcept>

#include "sehp/prediction.hpp"

namespace sehp {

namespace {

void validate_pairs(std::span<const double> predicted,
                    std::span<const double> actual) {
    if (predicted.size() != actual.size()) {
        throw std::domain_error("metric inputs differ in length");
    }
    if (predicted.empty()) {
        throw std::domain_error("metric inputs are empty");
    }
    for (double r : actual) {
        if (!(r > 0.0)) {
            throw std::domain_error(
                "actual popularity must be strictly positive; "
                "percentage error is undefined at zero");
        }
    }
}

}  // namespace

double mape(std::span<const double> predicted, std::span<const double> actual) {
    validate_pairs(predicted, actual);
    double sum = 0.0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        sum += std::abs(predicted[i] - actual[i]) / actual[i];
    }
    return sum / static_cast<double>(predicted.size());
}

double accuracy(std::span<const double> predicted, std::span<const double> actual,
                double epsilon) {
    validate_pairs(predicted, actual);
    if (!(epsilon >= 0.0)) {
        throw std::domain_error("accuracy tolerance must be non-negative");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (std::abs(predicted[i] - actual[i]) / actual[i] <= epsilon) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

std::vector<HorizonReport> horizon_sweep(std::span<const Cascade> cascades,
                                         std::span<const SehpParams> params,
                                         double train_t,
                                         std::span<const double> offsets,
                                         double epsilon) {
    if (cascades.size() != params.size()) {
        throw std::invalid_argument("horizon_sweep: one parameter set per cascade");
    }
    if (!(train_t > 0.0)) {
        throw std::invalid_argument("horizon_sweep: train_t must be positive");
    }
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        if (!(offsets[i] >= 0.0) || (i > 0 && !(offsets[i] > offsets[i - 1]))) {
            throw std::invalid_argument(
                "horizon_sweep: offsets must be non-negative and strictly increasing");
        }
    }
    const double max_offset = offsets.empty() ? 0.0 : offsets.back();
    for (const auto& cascade : cascades) {
        if (cascade.horizon < train_t + max_offset) {
            throw std::invalid_argument(
                "horizon_sweep: cascade '" + cascade.id +
                "' does not extend to the last horizon");
        }
    }

    std::vector<double> times(offsets.size());
    for (std::size_t h = 0; h < offsets.size(); ++h) {
        times[h] = train_t + offsets[h];
    }
    std::vector<PredictionSeries> series;
    series.reserve(cascades.size());
    for (std::size_t i = 0; i < cascades.size(); ++i) {
        series.push_back(
            predict_series(params[i], cascades[i].truncated(train_t), times));
    }

    std::vector<HorizonReport> reports;
    reports.reserve(offsets.size());
    for (std::size_t h = 0; h < offsets.size(); ++h) {
        HorizonReport report;
        report.horizon_seconds = offsets[h];
        std::vector<double> predicted;
        std::vector<double> actual;
        for (std::size_t i = 0; i < cascades.size(); ++i) {
            const auto count = cascades[i].count_at(times[h]);
            if (count == 0) {
                ++report.n_skipped;
                continue;
            }
            predicted.push_back(series[i].expected_counts[h]);
            actual.push_back(static_cast<double>(count));
        }
        report.n_items = predicted.size();
        if (report.n_items > 0) {
            report.mape = mape(predicted, actual);
            report.accuracy = accuracy(predicted, actual, epsilon);
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace sehp
