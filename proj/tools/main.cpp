#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

// Exit codes: 0 success, 1 usage error, 2 runtime error.
int main(int argc, char** argv) {
    CLI::App app{
        "sehp: model cascade popularity with a self-excited point process.\n"
        "Cascade files are line-delimited JSON objects with exactly the keys\n"
        "id (string), timestamps (seconds, array) and horizon (seconds)."};
    app.require_subcommand(1);

    sehpcli::SimulateOptions simulate;
    auto* sim = app.add_subcommand("simulate",
                                   "Sample synthetic cascades with ground truth");
    sim->add_option("--v", simulate.v, "Initial triggering strength (events/s)")
        ->required()
        ->check(CLI::PositiveNumber);
    sim->add_option("--alpha", simulate.alpha, "Triggering strength per forwarding")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sim->add_option("--beta", simulate.beta, "Decay rate (1/s)")
        ->required()
        ->check(CLI::PositiveNumber);
    sim->add_option("--horizon", simulate.horizon, "Observation window (s)")
        ->required()
        ->check(CLI::PositiveNumber);
    sim->add_option("--count", simulate.count, "Number of cascades")
        ->check(CLI::PositiveNumber);
    sim->add_option("--seed", simulate.seed, "Seed of the first cascade");
    sim->add_option("--max-events", simulate.max_events,
                    "Safety cap on events per cascade")
        ->check(CLI::PositiveNumber);
    sim->add_option("--out", simulate.out, "Output cascade file")->required();
    sim->add_option("--truth", simulate.truth_out,
                    "Truth sidecar path (default: <out>.truth.jsonl)");

    sehpcli::FilterOptions filter;
    auto* fil = app.add_subcommand("filter", "Keep cascades passing count thresholds");
    fil->add_option("--in", filter.in, "Input cascade file")
        ->required()
        ->check(CLI::ExistingFile);
    fil->add_option("--out", filter.out, "Output cascade file")->required();
    fil->add_option("--min-early", filter.min_early,
                    "Events required (strictly more) within the early window");
    fil->add_option("--early-window-s", filter.early_window, "Early window (s)")
        ->check(CLI::NonNegativeNumber);
    fil->add_option("--min-total", filter.min_total,
                    "Events required (strictly more) within the total window");
    fil->add_option("--total-window-s", filter.total_window, "Total window (s)")
        ->check(CLI::NonNegativeNumber);

    sehpcli::FitOptions fit;
    auto* fitc = app.add_subcommand("fit",
                                    "Maximum-likelihood parameters per cascade");
    fitc->add_option("--in", fit.in, "Input cascade file")
        ->required()
        ->check(CLI::ExistingFile);
    fitc->add_option("--out", fit.out, "Output parameter table (CSV)")->required();
    fitc->add_option("--train-t", fit.train_t,
                     "Truncate each cascade to events at or before this time (s)")
        ->check(CLI::PositiveNumber);
    fitc->add_option("--max-iter", fit.max_iterations, "Optimizer iteration cap")
        ->check(CLI::PositiveNumber);
    fitc->add_option("--grad-tol", fit.gradient_tolerance,
                     "Convergence threshold on the log-space gradient")
        ->check(CLI::PositiveNumber);
    fitc->add_option("--restarts", fit.n_restarts, "Random restarts per cascade")
        ->check(CLI::PositiveNumber);
    fitc->add_option("--seed", fit.seed, "Restart randomization seed");
    fitc->add_option("--jobs", fit.jobs, "Parallel fit workers")
        ->check(CLI::PositiveNumber);

    sehpcli::PredictOptions predict;
    auto* pre = app.add_subcommand("predict",
                                   "Expected counts on an hourly horizon grid");
    pre->add_option("--params", predict.params_path, "Parameter table from fit")
        ->required()
        ->check(CLI::ExistingFile);
    pre->add_option("--in", predict.in, "Input cascade file")
        ->required()
        ->check(CLI::ExistingFile);
    pre->add_option("--out", predict.out, "Output prediction table (CSV)")
        ->required();
    pre->add_option("--train-t", predict.train_t,
                    "Truncate each cascade as during fitting (s)")
        ->check(CLI::PositiveNumber);
    pre->add_option("--from-h", predict.from_h, "First horizon offset (hours)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    pre->add_option("--to-h", predict.to_h, "Last horizon offset (hours)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    pre->add_option("--step-h", predict.step_h, "Grid step (hours)")
        ->check(CLI::PositiveNumber);

    sehpcli::EvaluateOptions evaluate;
    auto* eva = app.add_subcommand("evaluate",
                                   "Score predictions against observed counts");
    eva->add_option("--pred", evaluate.pred_path, "Prediction table from predict")
        ->required()
        ->check(CLI::ExistingFile);
    eva->add_option("--in", evaluate.in, "Full-length cascade file")
        ->required()
        ->check(CLI::ExistingFile);
    eva->add_option("--out", evaluate.out, "Output metrics (JSON lines)")
        ->required();
    eva->add_option("--train-t", evaluate.train_t, "Training end used by fit (s)")
        ->required()
        ->check(CLI::PositiveNumber);
    eva->add_option("--epsilon", evaluate.epsilon,
                    "Relative error tolerance for accuracy")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) sehpcli::cmd_simulate(simulate);
        if (fil->parsed()) sehpcli::cmd_filter(filter);
        if (fitc->parsed()) sehpcli::cmd_fit(fit);
        if (pre->parsed()) sehpcli::cmd_predict(predict);
        if (eva->parsed()) sehpcli::cmd_evaluate(evaluate);
    } catch (const sehpcli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
