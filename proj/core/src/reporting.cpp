#include "crosswalk/reporting.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "crosswalk/errors.hpp"

namespace crosswalk {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json path_to_json(const ElementPath& path) {
    ordered_json j;
    j["segments"] = path.path;
    if (!path.attributes.empty()) {
        ordered_json attrs = ordered_json::array();
        for (const auto& [name, value] : path.attributes)
            attrs.push_back({{"name", name}, {"value", value}});
        j["attributes"] = std::move(attrs);
    }
    j["render"] = path.render();
    return j;
}

ElementPath path_from_json(const ordered_json& j, Standard standard) {
    ElementPath path;
    path.standard = standard;
    for (const auto& segment : j.at("segments")) path.path.push_back(segment.get<std::string>());
    if (j.contains("attributes"))
        for (const auto& attr : j.at("attributes"))
            path.attributes.emplace_back(attr.at("name").get<std::string>(),
                                         attr.at("value").get<std::string>());
    return path;
}

ordered_json assertion_to_json(const PropertyAssertion& assertion) {
    ordered_json j;
    j["property"] = std::string(property_name(assertion.property));
    j["value"] = assertion.value;
    if (assertion.qualifier) j["qualifier"] = qualifier_label(*assertion.qualifier);
    if (assertion.normalized) {
        ordered_json n;
        if (const auto* date = std::get_if<IsoDate>(&*assertion.normalized)) {
            ordered_json d;
            d["year"] = date->year;
            if (date->month) d["month"] = *date->month;
            if (date->day) d["day"] = *date->day;
            n["date"] = std::move(d);
        } else if (const auto* lang = std::get_if<LanguageCode>(&*assertion.normalized)) {
            n["language"] = lang->code;
        } else if (const auto* agent = std::get_if<AgentKind>(&*assertion.normalized)) {
            n["agent"] = *agent == AgentKind::Corporate ? "corporate" : "personal";
        }
        j["normalized"] = std::move(n);
    }
    return j;
}

PropertyAssertion assertion_from_json(const ordered_json& j) {
    PropertyAssertion assertion;
    auto property = property_from_name(j.at("property").get<std::string>());
    if (!property) throw SchemaViolationError("unknown property in loss report");
    assertion.property = *property;
    assertion.value = j.at("value").get<std::string>();
    if (j.contains("qualifier"))
        assertion.qualifier =
            qualifier_from_label(assertion.property, j.at("qualifier").get<std::string>());
    if (j.contains("normalized")) {
        const auto& n = j.at("normalized");
        if (n.contains("date")) {
            IsoDate date;
            date.year = n.at("date").at("year").get<int>();
            if (n.at("date").contains("month")) date.month = n.at("date").at("month").get<int>();
            if (n.at("date").contains("day")) date.day = n.at("date").at("day").get<int>();
            assertion.normalized = NormalizedValue{date};
        } else if (n.contains("language")) {
            assertion.normalized =
                NormalizedValue{LanguageCode{n.at("language").get<std::string>()}};
        } else if (n.contains("agent")) {
            assertion.normalized = NormalizedValue{n.at("agent").get<std::string>() == "corporate"
                                                       ? AgentKind::Corporate
                                                       : AgentKind::Personal};
        }
    }
    return assertion;
}

std::string clip(const std::string& text, std::size_t width) {
    if (text.size() <= width) return text;
    return text.substr(0, width - 3) + "...";
}

std::string assertion_line(const PropertyAssertion& assertion) {
    std::string line = "  - " + std::string(property_name(assertion.property));
    if (assertion.qualifier) line += " [" + qualifier_label(*assertion.qualifier) + "]";
    line += ": " + clip(assertion.value, 78 - line.size() - 2);
    return line;
}

} // namespace

std::string render_loss(const LossReport& report, ReportFormat format) {
    if (format == ReportFormat::Json) {
        ordered_json j;
        j["record_id"] = report.record_id;
        j["standard"] = std::string(standard_token(report.standard));
        j["total_assertions"] = report.total_assertions;
        j["converted_count"] = report.converted_count;
        j["lossy"] = report.lossy();
        j["dropped"] = ordered_json::array();
        for (const auto& entry : report.dropped) {
            auto e = assertion_to_json(entry.assertion);
            e["reason"] = entry.reason;
            j["dropped"].push_back(std::move(e));
        }
        j["approximated"] = ordered_json::array();
        for (const auto& entry : report.approximated) {
            auto e = assertion_to_json(entry.assertion);
            e["target"] = path_to_json(entry.target);
            e["note"] = entry.note;
            j["approximated"].push_back(std::move(e));
        }
        j["alternative_resolved"] = ordered_json::array();
        for (const auto& entry : report.alternative_resolved) {
            auto e = assertion_to_json(entry.assertion);
            e["target"] = path_to_json(entry.target);
            ordered_json options = ordered_json::array();
            for (const auto& option : entry.options) options.push_back(path_to_json(option));
            e["options"] = std::move(options);
            j["alternative_resolved"].push_back(std::move(e));
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "conversion loss report\n";
    out << "  record:   " << report.record_id << "\n";
    out << "  standard: " << standard_token(report.standard) << "\n";
    out << "  assertions: " << report.total_assertions << " total, " << report.converted_count
        << " converted, " << report.dropped.size() << " dropped, " << report.approximated.size()
        << " approximated, " << report.alternative_resolved.size() << " alternative-resolved\n";
    out << "  lossy: " << (report.lossy() ? "yes" : "no") << "\n";
    out << "\ndropped (rule kind: unmappable)\n";
    if (report.dropped.empty()) out << "  (none)\n";
    for (const auto& entry : report.dropped) out << assertion_line(entry.assertion) << "\n";
    out << "\napproximated\n";
    if (report.approximated.empty()) out << "  (none)\n";
    for (const auto& entry : report.approximated) {
        out << assertion_line(entry.assertion) << "\n";
        out << "      -> " << entry.target.render() << ": " << clip(entry.note, 80 - 10) << "\n";
    }
    out << "\nalternative resolved\n";
    if (report.alternative_resolved.empty()) out << "  (none)\n";
    for (const auto& entry : report.alternative_resolved) {
        out << assertion_line(entry.assertion) << "\n";
        out << "      -> " << entry.target.render() << " (options:";
        for (std::size_t i = 0; i < entry.options.size(); ++i)
            out << (i ? ", " : " ") << entry.options[i].render();
        out << ")\n";
    }
    return out.str();
}

LossReport loss_report_from_json(std::string_view json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedDocumentError(std::string("loss report is not valid JSON: ") + e.what());
    }
    LossReport report;
    report.record_id = j.at("record_id").get<std::string>();
    auto standard = standard_from_token(j.at("standard").get<std::string>());
    if (!standard) throw SchemaViolationError("unknown standard in loss report");
    report.standard = *standard;
    report.total_assertions = j.at("total_assertions").get<std::size_t>();
    report.converted_count = j.at("converted_count").get<std::size_t>();
    for (const auto& entry : j.at("dropped"))
        report.dropped.push_back(
            {assertion_from_json(entry), entry.at("reason").get<std::string>()});
    for (const auto& entry : j.at("approximated"))
        report.approximated.push_back({assertion_from_json(entry),
                                       path_from_json(entry.at("target"), report.standard),
                                       entry.at("note").get<std::string>()});
    for (const auto& entry : j.at("alternative_resolved")) {
        AlternativeResolvedEntry e;
        e.assertion = assertion_from_json(entry);
        e.target = path_from_json(entry.at("target"), report.standard);
        for (const auto& option : entry.at("options"))
            e.options.push_back(path_from_json(option, report.standard));
        report.alternative_resolved.push_back(std::move(e));
    }
    return report;
}

BatchSummary summarize(std::span<const LossReport> reports) {
    BatchSummary summary;
    std::map<std::string, std::size_t> dropped_by_record;
    for (const auto& report : reports) {
        auto& counters = summary.per_standard[report.standard];
        counters.records += 1;
        counters.assertions_converted += report.converted_count;
        counters.dropped += report.dropped.size();
        counters.approximated += report.approximated.size();
        counters.alternative_resolved += report.alternative_resolved.size();
        dropped_by_record[report.record_id] += report.dropped.size();
    }
    for (const auto& [record_id, dropped] : dropped_by_record)
        if (dropped > 0) summary.worst_records.emplace_back(record_id, dropped);
    std::sort(summary.worst_records.begin(), summary.worst_records.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    return summary;
}

std::string render_summary(const BatchSummary& summary, ReportFormat format) {
    if (format == ReportFormat::Json) {
        ordered_json j;
        ordered_json per = ordered_json::object();
        for (const auto& [standard, counters] : summary.per_standard) {
            ordered_json c;
            c["records"] = counters.records;
            c["assertions_converted"] = counters.assertions_converted;
            c["dropped"] = counters.dropped;
            c["approximated"] = counters.approximated;
            c["alternative_resolved"] = counters.alternative_resolved;
            per[std::string(standard_token(standard))] = std::move(c);
        }
        j["per_standard"] = std::move(per);
        j["worst_records"] = ordered_json::array();
        for (const auto& [record_id, dropped] : summary.worst_records)
            j["worst_records"].push_back({{"record_id", record_id}, {"dropped", dropped}});
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "batch summary\n";
    out << "  standard             records  converted  dropped  approximated  alternative\n";
    for (const auto& [standard, counters] : summary.per_standard) {
        out << "  ";
        std::string name(standard_token(standard));
        name.resize(19, ' ');
        out << name << ' ';
        auto column = [&out](std::size_t value, int width) {
            std::string s = std::to_string(value);
            out << std::string(width > static_cast<int>(s.size()) ? width - s.size() : 1, ' ')
                << s;
        };
        column(counters.records, 8);
        column(counters.assertions_converted, 11);
        column(counters.dropped, 9);
        column(counters.approximated, 14);
        column(counters.alternative_resolved, 13);
        out << "\n";
    }
    out << "worst records (by dropped assertions)\n";
    if (summary.worst_records.empty()) out << "  (none)\n";
    for (const auto& [record_id, dropped] : summary.worst_records)
        out << "  " << dropped << "  " << record_id << "\n";
    return out.str();
}

} // namespace crosswalk
