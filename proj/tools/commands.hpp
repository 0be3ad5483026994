#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sehpcli {

// semantic argument problems discovered after flag parsing; mapped to the
// usage exit code by main
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SimulateOptions {
    double v = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double horizon = 0.0;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    std::size_t max_events = 1000000;
    std::string out;
    std::string truth_out;  // defaults to "<out>.truth.jsonl" when empty
};

struct FilterOptions {
    std::string in;
    std::string out;
    double early_window = 3600.0;
    std::size_t min_early = 10;
    double total_window = 172800.0;
    std::size_t min_total = 100;
};

struct FitOptions {
    std::string in;
    std::string out;
    std::optional<double> train_t;
    std::size_t max_iterations = 500;
    double gradient_tolerance = 1e-6;
    std::size_t n_restarts = 4;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
};

struct PredictOptions {
    std::string params_path;
    std::string in;
    std::string out;
    std::optional<double> train_t;
    double from_h = 0.0;
    double to_h = 0.0;
    double step_h = 1.0;
};

struct EvaluateOptions {
    std::string pred_path;
    std::string in;
    std::string out;
    double train_t = 0.0;
    double epsilon = 0.2;
};

void cmd_simulate(const SimulateOptions& options);
void cmd_filter(const FilterOptions& options);
void cmd_fit(const FitOptions& options);
void cmd_predict(const PredictOptions& options);
void cmd_evaluate(const EvaluateOptions& options);

}  // namespace sehpcli
