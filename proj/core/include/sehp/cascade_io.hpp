#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sehp/types.hpp"

namespace sehp {

struct ParseIssue {
    std::size_t line = 0;   // 1-based input line number
    std::string id;         // empty when the record's id could not be read
    bool rejected = false;  // false: warning, the record was kept
    std::string reason;
};

struct ParseResult {
    std::vector<Cascade> cascades;
    std::vector<ParseIssue> issues;

    bool has_rejections() const noexcept;
};

// Reads line-delimited JSON records with exactly the keys `id` (string),
// `timestamps` (array of non-negative numbers) and `horizon` (positive
// number). Malformed or invariant-violating records are rejected per line;
// unsorted timestamps are stably sorted and reported as a warning. Blank
// lines are ignored.
ParseResult parse_cascades(std::istream& in);

std::string to_json_line(const Cascade& cascade);
void write_cascades(std::ostream& out, std::span<const Cascade> cascades);

// Keeps exactly the cascades passing the criteria, preserving order.
std::vector<Cascade> filter_cascades(std::span<const Cascade> cascades,
                                     const FilterCriteria& criteria);

}  // namespace sehp
