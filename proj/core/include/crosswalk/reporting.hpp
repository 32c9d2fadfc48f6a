#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosswalk/engine.hpp"

namespace crosswalk {

enum class ReportFormat { Json, Text };

/// Renders a loss report. The JSON form carries the three lists verbatim
/// and re-parses (loss_report_from_json) to a structurally equal report;
/// the text form is a width-80-friendly per-assertion table. Both name the
/// rule kind responsible for each entry.
std::string render_loss(const LossReport& report, ReportFormat format);

LossReport loss_report_from_json(std::string_view json_text);

struct StandardCounters {
    std::size_t records = 0;
    std::size_t assertions_converted = 0;
    std::size_t dropped = 0;
    std::size_t approximated = 0;
    std::size_t alternative_resolved = 0;
    bool operator==(const StandardCounters&) const = default;
};

/// Batch aggregate: per-standard counter sums plus the records with the
/// most dropped assertions (descending, ties broken by record id).
struct BatchSummary {
    std::map<Standard, StandardCounters> per_standard;
    std::vector<std::pair<std::string, std::size_t>> worst_records;
    bool operator==(const BatchSummary&) const = default;
};

/// Element-wise sums over the input reports. Additive and, apart from the
/// deterministic worst_records ordering, permutation-invariant.
BatchSummary summarize(std::span<const LossReport> reports);

std::string render_summary(const BatchSummary& summary, ReportFormat format);

} // namespace crosswalk
