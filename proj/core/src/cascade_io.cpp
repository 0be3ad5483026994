#include "sehp/cascade_io.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>

namespace sehp {

namespace {

using ordered_json = nlohmann::ordered_json;

bool all_whitespace(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

bool ParseResult::has_rejections() const noexcept {
    return std::any_of(issues.begin(), issues.end(),
                       [](const ParseIssue& i) { return i.rejected; });
}

ParseResult parse_cascades(std::istream& in) {
    ParseResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || all_whitespace(line)) continue;

        const auto record = nlohmann::json::parse(line, nullptr, false);
        if (record.is_discarded()) {
            result.issues.push_back({line_no, "", true, "invalid JSON"});
            continue;
        }
        if (!record.is_object() || record.size() != 3 || !record.contains("id") ||
            !record.contains("timestamps") || !record.contains("horizon")) {
            result.issues.push_back(
                {line_no, "", true,
                 "record must have exactly the keys id, timestamps, horizon"});
            continue;
        }
        if (!record["id"].is_string()) {
            result.issues.push_back({line_no, "", true, "id must be a string"});
            continue;
        }

        Cascade cascade;
        cascade.id = record["id"].get<std::string>();
        if (!record["horizon"].is_number()) {
            result.issues.push_back(
                {line_no, cascade.id, true, "horizon must be a number"});
            continue;
        }
        cascade.horizon = record["horizon"].get<double>();
        if (!(std::isfinite(cascade.horizon) && cascade.horizon > 0.0)) {
            result.issues.push_back(
                {line_no, cascade.id, true, "horizon must be positive"});
            continue;
        }

        const auto& stamps = record["timestamps"];
        if (!stamps.is_array()) {
            result.issues.push_back(
                {line_no, cascade.id, true, "timestamps must be an array"});
            continue;
        }
        bool ok = true;
        cascade.timestamps.reserve(stamps.size());
        for (const auto& item : stamps) {
            if (!item.is_number()) {
                result.issues.push_back(
                    {line_no, cascade.id, true, "timestamps must be numbers"});
                ok = false;
                break;
            }
            const double t = item.get<double>();
            if (!std::isfinite(t) || t < 0.0) {
                result.issues.push_back(
                    {line_no, cascade.id, true, "negative timestamp"});
                ok = false;
                break;
            }
            if (t > cascade.horizon) {
                result.issues.push_back(
                    {line_no, cascade.id, true, "timestamp exceeds horizon"});
                ok = false;
                break;
            }
            cascade.timestamps.push_back(t);
        }
        if (!ok) continue;

        if (!std::is_sorted(cascade.timestamps.begin(), cascade.timestamps.end())) {
            // stable sort keeps equal stamps in input order
            std::stable_sort(cascade.timestamps.begin(), cascade.timestamps.end());
            result.issues.push_back(
                {line_no, cascade.id, false, "timestamps out of order; sorted"});
        }
        result.cascades.push_back(std::move(cascade));
    }
    return result;
}

std::string to_json_line(const Cascade& cascade) {
    ordered_json record;
    record["id"] = cascade.id;
    record["timestamps"] = cascade.timestamps;
    record["horizon"] = cascade.horizon;
    return record.dump();
}

void write_cascades(std::ostream& out, std::span<const Cascade> cascades) {
    for (const auto& cascade : cascades) {
        out << to_json_line(cascade) << '\n';
    }
}

std::vector<Cascade> filter_cascades(std::span<const Cascade> cascades,
                                     const FilterCriteria& criteria) {
    validate_criteria(criteria);
    std::vector<Cascade> kept;
    for (const auto& cascade : cascades) {
        if (cascade.count_at(criteria.early_window) > criteria.min_early &&
            cascade.count_at(criteria.total_window) > criteria.min_total) {
            kept.push_back(cascade);
        }
    }
    return kept;
}

}  // namespace sehp
