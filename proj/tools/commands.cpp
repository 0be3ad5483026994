#include "commands.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <thread>
#include <vector>

#include "csv.hpp"
#include "sehp/cascade_io.hpp"
#include "sehp/estimation.hpp"
#include "sehp/evaluation.hpp"
#include "sehp/prediction.hpp"
#include "sehp/simulation.hpp"
#include "sehp/types.hpp"

namespace sehpcli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr char kParamsHeader[] =
    "id,v,alpha,beta,log_likelihood,gradient_norm,iterations,converged,status";
constexpr char kPredictionsHeader[] = "id,horizon_seconds,predicted_count,status";

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

sehp::ParseResult read_cascades(const std::string& path) {
    auto in = open_input(path);
    auto parsed = sehp::parse_cascades(in);
    for (const auto& issue : parsed.issues) {
        std::cerr << path << ':' << issue.line << ": "
                  << (issue.rejected ? "rejected" : "warning");
        if (!issue.id.empty()) std::cerr << " (id '" << issue.id << "')";
        std::cerr << ": " << issue.reason << '\n';
    }
    return parsed;
}

// events <= train_t with the horizon clipped; no-op when train_t is unset
sehp::Cascade training_view(const sehp::Cascade& cascade,
                            const std::optional<double>& train_t) {
    return train_t ? cascade.truncated(*train_t) : cascade;
}

std::vector<std::string> read_table(const std::string& path, const char* header) {
    auto in = open_input(path);
    std::string line;
    if (!std::getline(in, line) || line != header) {
        throw std::runtime_error("'" + path + "' does not start with the header '" +
                                 header + "'");
    }
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (!line.empty()) rows.push_back(std::move(line));
    }
    return rows;
}

}  // namespace

void cmd_simulate(const SimulateOptions& options) {
    std::vector<sehp::SimConfig> configs;
    configs.reserve(options.count);
    for (std::size_t i = 0; i < options.count; ++i) {
        sehp::SimConfig config;
        config.params = sehp::SehpParams{options.v, options.alpha, options.beta};
        config.horizon = options.horizon;
        config.seed = options.seed + i;
        config.max_events = options.max_events;
        configs.push_back(config);
    }
    const auto corpus = sehp::simulate_corpus(configs);

    auto out = open_output(options.out);
    sehp::write_cascades(out, corpus.cascades);

    const std::string truth_path =
        options.truth_out.empty() ? options.out + ".truth.jsonl" : options.truth_out;
    auto truth = open_output(truth_path);
    for (const auto& record : corpus.truth) {
        ordered_json line;
        line["v"] = record.params.v;
        line["alpha"] = record.params.alpha;
        line["beta"] = record.params.beta;
        line["seed_range"] = {record.seed_first, record.seed_last};
        truth << line.dump() << '\n';
    }
    std::cout << "wrote " << corpus.cascades.size() << " cascades to " << options.out
              << " and truth to " << truth_path << '\n';
}

void cmd_filter(const FilterOptions& options) {
    sehp::FilterCriteria criteria{options.early_window, options.min_early,
                                  options.total_window, options.min_total};
    try {
        sehp::validate_criteria(criteria);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto parsed = read_cascades(options.in);
    const auto kept = sehp::filter_cascades(parsed.cascades, criteria);
    auto out = open_output(options.out);
    sehp::write_cascades(out, kept);
    std::cout << "kept=" << kept.size()
              << " dropped=" << parsed.cascades.size() - kept.size() << '\n';
}

void cmd_fit(const FitOptions& options) {
    const auto parsed = read_cascades(options.in);
    if (parsed.cascades.empty()) {
        throw std::runtime_error("no cascades in '" + options.in + "'");
    }

    sehp::FitConfig config;
    config.max_iterations = options.max_iterations;
    config.gradient_tolerance = options.gradient_tolerance;
    config.n_restarts = options.n_restarts;
    config.seed = options.seed;

    struct Row {
        std::string id;
        std::string status;
        sehp::FitResult result;
    };
    std::vector<Row> rows(parsed.cascades.size());

    // per-cascade fits are independent; results land in input order
    std::atomic<std::size_t> cursor{0};
    const auto worker = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < parsed.cascades.size();
             i = cursor.fetch_add(1)) {
            const auto cascade = training_view(parsed.cascades[i], options.train_t);
            Row& row = rows[i];
            row.id = cascade.id;
            try {
                row.result = sehp::fit(cascade, config);
                row.status = "ok";
            } catch (const sehp::FitError& e) {
                row.status = e.kind() == sehp::FitError::Kind::unfittable
                                 ? "unfittable"
                                 : "failed";
            }
        }
    };
    const std::size_t n_workers =
        std::min<std::size_t>(std::max<std::size_t>(options.jobs, 1),
                              parsed.cascades.size());
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    auto out = open_output(options.out);
    out << kParamsHeader << '\n';
    for (const auto& row : rows) {
        out << csv_field(row.id) << ',';
        if (row.status == "ok") {
            out << format_double(row.result.params.v) << ','
                << format_double(row.result.params.alpha) << ','
                << format_double(row.result.params.beta) << ','
                << format_double(row.result.log_likelihood) << ','
                << format_double(row.result.gradient_norm) << ','
                << row.result.iterations << ','
                << (row.result.converged ? "true" : "false") << ',';
        } else {
            out << ",,,,,,,";
        }
        out << row.status << '\n';
    }
}

void cmd_predict(const PredictOptions& options) {
    if (options.to_h < options.from_h) {
        throw UsageError("--to-h must not be smaller than --from-h");
    }
    std::vector<double> offsets;
    for (std::size_t k = 0;; ++k) {
        const double h = options.from_h + static_cast<double>(k) * options.step_h;
        if (h > options.to_h + 1e-9 * options.step_h) break;
        offsets.push_back(h * 3600.0);
    }

    const auto parsed = read_cascades(options.in);
    std::map<std::string, const sehp::Cascade*> by_id;
    for (const auto& cascade : parsed.cascades) by_id[cascade.id] = &cascade;

    const auto rows = read_table(options.params_path, kParamsHeader);
    auto out = open_output(options.out);
    out << kPredictionsHeader << '\n';
    for (const auto& line : rows) {
        const auto fields = split_csv_line(line);
        if (fields.size() != 9) {
            throw std::runtime_error("malformed parameter row: '" + line + "'");
        }
        const std::string& id = fields[0];
        const std::string& status = fields[8];
        if (status != "ok") {
            std::cerr << "skipping '" << id << "': fit status " << status << '\n';
            continue;
        }
        const auto found = by_id.find(id);
        if (found == by_id.end()) {
            out << csv_field(id) << ",,,missing_cascade\n";
            continue;
        }
        const sehp::SehpParams params{parse_double(fields[1]),
                                      parse_double(fields[2]),
                                      parse_double(fields[3])};
        const auto cascade = training_view(*found->second, options.train_t);
        std::vector<double> times(offsets.size());
        for (std::size_t k = 0; k < offsets.size(); ++k) {
            times[k] = cascade.horizon + offsets[k];
        }
        const auto series = sehp::predict_series(params, cascade, times);
        for (std::size_t k = 0; k < offsets.size(); ++k) {
            out << csv_field(id) << ',' << format_double(offsets[k]) << ','
                << format_double(series.expected_counts[k]) << ",ok\n";
        }
    }
}

void cmd_evaluate(const EvaluateOptions& options) {
    const auto parsed = read_cascades(options.in);
    std::map<std::string, const sehp::Cascade*> by_id;
    for (const auto& cascade : parsed.cascades) by_id[cascade.id] = &cascade;

    struct Item {
        std::string id;
        double predicted;
    };
    std::map<double, std::vector<Item>> by_offset;
    for (const auto& line : read_table(options.pred_path, kPredictionsHeader)) {
        const auto fields = split_csv_line(line);
        if (fields.size() != 4) {
            throw std::runtime_error("malformed prediction row: '" + line + "'");
        }
        if (fields[3] != "ok") {
            std::cerr << "skipping '" << fields[0] << "': prediction status "
                      << fields[3] << '\n';
            continue;
        }
        by_offset[parse_double(fields[1])].push_back(
            {fields[0], parse_double(fields[2])});
    }

    auto out = open_output(options.out);
    for (const auto& [offset, items] : by_offset) {
        const double t = options.train_t + offset;
        std::vector<double> predicted;
        std::vector<double> actual;
        std::size_t skipped = 0;
        for (const auto& item : items) {
            const auto found = by_id.find(item.id);
            if (found == by_id.end()) {
                std::cerr << "no cascade record for predicted id '" << item.id
                          << "'\n";
                ++skipped;
                continue;
            }
            const auto& cascade = *found->second;
            if (cascade.horizon < t) {
                std::cerr << "cascade '" << item.id << "' is not observed up to t="
                          << format_double(t) << "; skipped at this horizon\n";
                ++skipped;
                continue;
            }
            const auto count = cascade.count_at(t);
            if (count == 0) {
                ++skipped;  // percentage error undefined at zero popularity
                continue;
            }
            predicted.push_back(item.predicted);
            actual.push_back(static_cast<double>(count));
        }

        ordered_json report;
        report["horizon_seconds"] = offset;
        if (!predicted.empty()) {
            report["mape"] = sehp::mape(predicted, actual);
            report["accuracy"] = sehp::accuracy(predicted, actual, options.epsilon);
        }
        report["n_items"] = predicted.size();
        report["n_skipped"] = skipped;
        if (predicted.empty()) {
            report["error"] = "no_valid_items";
        }
        if (options.epsilon == 0.0) {
            report["epsilon_degenerate"] = true;
        }
        out << report.dump() << '\n';
    }
}

}  // namespace sehpcli
