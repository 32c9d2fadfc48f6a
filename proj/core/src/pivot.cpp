#include "crosswalk/pivot.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "crosswalk/errors.hpp"

namespace crosswalk {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<PivotProperty, kPivotPropertyCount> kProperties = {
    PivotProperty::Title,          PivotProperty::AlternativeTitle,
    PivotProperty::Author,         PivotProperty::TypeOfDocument,
    PivotProperty::Language,       PivotProperty::Identifier,
    PivotProperty::PhysicalExtent, PivotProperty::MaterialInformation,
    PivotProperty::PlaceOfOrigin,  PivotProperty::CreationDate,
    PivotProperty::CurrentLocation, PivotProperty::CustodyHistory,
    PivotProperty::Publisher,      PivotProperty::OtherEditions,
    PivotProperty::RelatedDate,    PivotProperty::RelatedPlace,
    PivotProperty::RelatedPerson,  PivotProperty::ExternalLink,
    PivotProperty::DescriptionNotes, PivotProperty::TypographyNote,
    PivotProperty::Keywords,
};

constexpr std::array<std::string_view, kPivotPropertyCount> kPropertyNames = {
    "Title",          "AlternativeTitle", "Author",          "TypeOfDocument",
    "Language",       "Identifier",       "PhysicalExtent",  "MaterialInformation",
    "PlaceOfOrigin",  "CreationDate",     "CurrentLocation", "CustodyHistory",
    "Publisher",      "OtherEditions",    "RelatedDate",     "RelatedPlace",
    "RelatedPerson",  "ExternalLink",     "DescriptionNotes", "TypographyNote",
    "Keywords",
};

constexpr std::array<std::string_view, kPivotPropertyCount> kPropertyDisplayNames = {
    "Title",          "Alternative title", "Author",          "Type of document",
    "Language",       "Identifier",        "Physical extent", "Material information",
    "Place of origin", "Creation Date",    "Current location", "Custody history",
    "Publisher",      "Other editions",    "Related date",    "Related place",
    "Related person", "External link",     "Description / Notes", "Typography note",
    "Keywords",
};

constexpr std::array<std::pair<AgentRole, std::string_view>, 7> kAgentLabels = {{
    {AgentRole::Sender, "Sender"},
    {AgentRole::Receiver, "Receiver"},
    {AgentRole::Creator, "Creator"},
    {AgentRole::Artist, "Artist"},
    {AgentRole::Deceased, "Deceased"},
    {AgentRole::Mentioned, "Mentioned"},
    {AgentRole::Depicted, "Depicted"},
}};

constexpr std::array<std::pair<DateKind, std::string_view>, 3> kDateLabels = {{
    {DateKind::Event, "Event"},
    {DateKind::DateOfDeath, "Date of death"},
    {DateKind::DateOfFuneral, "Date of funeral"},
}};

constexpr std::array<std::pair<PlaceKind, std::string_view>, 2> kPlaceLabels = {{
    {PlaceKind::SenderLocation, "Sender location"},
    {PlaceKind::EventPlace, "Event place"},
}};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

/// Splits a leading "<Label>: " qualifier prefix off a value when the label
/// is one of the closed labels for the property.
std::optional<std::pair<Qualifier, std::string>> split_prefix(PivotProperty p,
                                                              std::string_view value) {
    auto match = [&](std::string_view label) -> std::optional<std::string> {
        if (value.size() > label.size() && value.substr(0, label.size()) == label &&
            value[label.size()] == ':') {
            auto rest = trim(value.substr(label.size() + 1));
            if (!rest.empty()) return std::string(rest);
        }
        return std::nullopt;
    };
    if (p == PivotProperty::RelatedPerson) {
        for (auto [role, label] : kAgentLabels)
            if (auto rest = match(label)) return {{Qualifier{role}, *rest}};
    } else if (p == PivotProperty::RelatedDate) {
        for (auto [kind, label] : kDateLabels)
            if (auto rest = match(label)) return {{Qualifier{kind}, *rest}};
    } else if (p == PivotProperty::RelatedPlace) {
        for (auto [kind, label] : kPlaceLabels)
            if (auto rest = match(label)) return {{Qualifier{kind}, *rest}};
    }
    return std::nullopt;
}

std::optional<NormalizedValue> normalized_from_json(const ordered_json& j) {
    if (j.contains("date")) {
        const auto& d = j.at("date");
        IsoDate date;
        date.year = d.at("year").get<int>();
        if (d.contains("month")) date.month = d.at("month").get<int>();
        if (d.contains("day")) date.day = d.at("day").get<int>();
        return NormalizedValue{date};
    }
    if (j.contains("language")) return NormalizedValue{LanguageCode{j.at("language").get<std::string>()}};
    if (j.contains("agent")) {
        auto kind = j.at("agent").get<std::string>();
        if (kind == "corporate") return NormalizedValue{AgentKind::Corporate};
        if (kind == "personal") return NormalizedValue{AgentKind::Personal};
        throw SchemaViolationError("unknown agent kind '" + kind + "'");
    }
    throw SchemaViolationError("unrecognized normalized annotation");
}

ordered_json normalized_to_json(const NormalizedValue& n) {
    ordered_json j;
    if (const auto* date = std::get_if<IsoDate>(&n)) {
        ordered_json d;
        d["year"] = date->year;
        if (date->month) d["month"] = *date->month;
        if (date->day) d["day"] = *date->day;
        j["date"] = std::move(d);
    } else if (const auto* lang = std::get_if<LanguageCode>(&n)) {
        j["language"] = lang->code;
    } else if (const auto* agent = std::get_if<AgentKind>(&n)) {
        j["agent"] = *agent == AgentKind::Corporate ? "corporate" : "personal";
    }
    return j;
}

bool days_in_month_ok(int year, int month, int day) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12 || day < 1) return false;
    int max = lengths[static_cast<std::size_t>(month - 1)];
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) max = 29;
    return day <= max;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

} // namespace

std::span<const PivotProperty> all_properties() { return kProperties; }

std::string_view property_name(PivotProperty p) {
    return kPropertyNames[static_cast<std::size_t>(p)];
}

std::string_view property_display_name(PivotProperty p) {
    return kPropertyDisplayNames[static_cast<std::size_t>(p)];
}

std::optional<PivotProperty> property_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kPropertyNames.size(); ++i)
        if (kPropertyNames[i] == name) return kProperties[i];
    return std::nullopt;
}

std::string qualifier_label(const Qualifier& q) {
    if (const auto* role = std::get_if<AgentRole>(&q)) {
        for (auto [r, label] : kAgentLabels)
            if (r == *role) return std::string(label);
    } else if (const auto* date = std::get_if<DateKind>(&q)) {
        for (auto [d, label] : kDateLabels)
            if (d == *date) return std::string(label);
    } else if (const auto* place = std::get_if<PlaceKind>(&q)) {
        for (auto [p, label] : kPlaceLabels)
            if (p == *place) return std::string(label);
    } else if (const auto* od = std::get_if<OtherDateKind>(&q)) {
        return od->label;
    } else if (const auto* op = std::get_if<OtherPlaceKind>(&q)) {
        return op->label;
    }
    return {};
}

bool qualifier_allowed_on(PivotProperty p, const Qualifier& q) {
    switch (p) {
    case PivotProperty::RelatedPerson:
        return std::holds_alternative<AgentRole>(q);
    case PivotProperty::RelatedDate:
        return std::holds_alternative<DateKind>(q) || std::holds_alternative<OtherDateKind>(q);
    case PivotProperty::RelatedPlace:
        return std::holds_alternative<PlaceKind>(q) || std::holds_alternative<OtherPlaceKind>(q);
    default:
        return false;
    }
}

std::optional<Qualifier> qualifier_from_label(PivotProperty p, std::string_view label) {
    if (label.empty()) return std::nullopt;
    switch (p) {
    case PivotProperty::RelatedPerson:
        for (auto [role, l] : kAgentLabels)
            if (l == label) return Qualifier{role};
        return std::nullopt; // agent roles are a closed set
    case PivotProperty::RelatedDate:
        for (auto [kind, l] : kDateLabels)
            if (l == label) return Qualifier{kind};
        return Qualifier{OtherDateKind{std::string(label)}};
    case PivotProperty::RelatedPlace:
        for (auto [kind, l] : kPlaceLabels)
            if (l == label) return Qualifier{kind};
        return Qualifier{OtherPlaceKind{std::string(label)}};
    default:
        return std::nullopt;
    }
}

PivotRecord parse_pivot_lenient(std::string_view document) {
    ordered_json j;
    try {
        j = ordered_json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedDocumentError(std::string("pivot document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaViolationError("pivot document root must be an object");
    if (!j.contains("id") || !j.at("id").is_string())
        throw SchemaViolationError("pivot document needs a string \"id\"");
    if (!j.contains("assertions") || !j.at("assertions").is_array())
        throw SchemaViolationError("pivot document needs an \"assertions\" array");

    PivotRecord record;
    record.record_id = j.at("id").get<std::string>();
    if (j.contains("digital_counterpart")) {
        if (!j.at("digital_counterpart").is_string())
            throw SchemaViolationError("\"digital_counterpart\" must be a string");
        record.digital_counterpart = j.at("digital_counterpart").get<std::string>();
    }

    for (const auto& entry : j.at("assertions")) {
        if (!entry.is_object() || !entry.contains("property") || !entry.contains("value") ||
            !entry.at("property").is_string() || !entry.at("value").is_string())
            throw SchemaViolationError("each assertion needs string \"property\" and \"value\"");
        auto name = entry.at("property").get<std::string>();
        auto property = property_from_name(name);
        if (!property) throw SchemaViolationError("unknown property name '" + name + "'");

        std::optional<Qualifier> explicit_qualifier;
        if (entry.contains("qualifier")) {
            if (!entry.at("qualifier").is_string())
                throw SchemaViolationError("\"qualifier\" must be a string");
            auto label = entry.at("qualifier").get<std::string>();
            explicit_qualifier = qualifier_from_label(*property, label);
            if (!explicit_qualifier)
                throw SchemaViolationError("qualifier '" + label + "' is not valid on " + name);
        }
        std::optional<NormalizedValue> normalized;
        if (entry.contains("normalized")) normalized = normalized_from_json(entry.at("normalized"));

        auto raw = entry.at("value").get<std::string>();
        std::vector<std::string> pieces;
        if (raw.find(';') == std::string::npos) {
            pieces.push_back(raw);
        } else {
            std::string_view rest = raw;
            while (true) {
                auto pos = rest.find(';');
                pieces.emplace_back(trim(rest.substr(0, pos)));
                if (pos == std::string_view::npos) break;
                rest.remove_prefix(pos + 1);
            }
        }
        for (auto& piece : pieces) {
            if (piece.empty())
                throw EmptyValueError("empty value in assertion for property " + name);
            PropertyAssertion assertion;
            assertion.property = *property;
            assertion.qualifier = explicit_qualifier;
            assertion.normalized = normalized;
            if (!explicit_qualifier) {
                if (auto stripped = split_prefix(*property, piece)) {
                    assertion.qualifier = stripped->first;
                    assertion.value = stripped->second;
                } else {
                    assertion.value = std::move(piece);
                }
            } else {
                assertion.value = std::move(piece);
            }
            record.assertions.push_back(std::move(assertion));
        }
    }

    if (j.contains("extensions")) {
        if (!j.at("extensions").is_array())
            throw SchemaViolationError("\"extensions\" must be an array");
        for (const auto& e : j.at("extensions")) {
            if (!e.is_object() || !e.contains("key") || !e.contains("value") ||
                !e.at("key").is_string() || !e.at("value").is_string())
                throw SchemaViolationError("each extension needs string \"key\" and \"value\"");
            record.extensions.push_back(
                {e.at("key").get<std::string>(), e.at("value").get<std::string>()});
        }
    }
    return record;
}

PivotRecord parse_pivot(std::string_view document) {
    PivotRecord record = parse_pivot_lenient(document);
    auto violations = validate_pivot(record);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "pivot document breaks " << violations.size() << " invariant(s):";
        for (const auto& v : violations) msg << " [" << v.rule << "] " << v.message << ";";
        throw SchemaViolationError(msg.str());
    }
    return record;
}

std::string serialize_pivot(const PivotRecord& record) {
    ordered_json j;
    j["id"] = record.record_id;
    if (record.digital_counterpart) j["digital_counterpart"] = *record.digital_counterpart;
    j["assertions"] = ordered_json::array();
    for (const auto& a : record.assertions) {
        ordered_json entry;
        entry["property"] = std::string(property_name(a.property));
        entry["value"] = a.value;
        if (a.qualifier) entry["qualifier"] = qualifier_label(*a.qualifier);
        if (a.normalized) entry["normalized"] = normalized_to_json(*a.normalized);
        j["assertions"].push_back(std::move(entry));
    }
    if (!record.extensions.empty()) {
        j["extensions"] = ordered_json::array();
        for (const auto& e : record.extensions)
            j["extensions"].push_back({{"key", e.key}, {"value", e.value}});
    }
    return j.dump(2) + "\n";
}

std::vector<Violation> validate_pivot(const PivotRecord& record) {
    std::vector<Violation> out;
    auto add = [&out](std::string_view rule, std::optional<std::size_t> index, std::string message) {
        out.push_back({std::string(rule), index, std::move(message)});
    };

    std::size_t titles = 0;
    std::size_t identifiers = 0;
    std::string identifier_value;
    for (std::size_t i = 0; i < record.assertions.size(); ++i) {
        const auto& a = record.assertions[i];
        if (a.property == PivotProperty::Title) ++titles;
        if (a.property == PivotProperty::Identifier) {
            ++identifiers;
            if (identifiers == 1) identifier_value = a.value;
        }
        if (a.value.empty()) add(rules::empty_value, i, "assertion value is empty");
        if (a.qualifier) {
            if (!qualifier_allowed_on(a.property, *a.qualifier))
                add(rules::qualifier_placement, i,
                    "qualifier '" + qualifier_label(*a.qualifier) + "' is not allowed on " +
                        std::string(property_name(a.property)));
            if (qualifier_label(*a.qualifier).empty())
                add(rules::qualifier_empty_label, i, "open qualifier label is empty");
        }
        if (a.normalized) {
            bool placed_ok = false;
            if (std::holds_alternative<IsoDate>(*a.normalized))
                placed_ok = a.property == PivotProperty::CreationDate ||
                            a.property == PivotProperty::RelatedDate;
            else if (std::holds_alternative<LanguageCode>(*a.normalized))
                placed_ok = a.property == PivotProperty::Language;
            else if (std::holds_alternative<AgentKind>(*a.normalized))
                placed_ok = a.property == PivotProperty::Author;
            if (!placed_ok)
                add(rules::normalized_placement, i,
                    "normalized annotation does not fit property " +
                        std::string(property_name(a.property)));
            if (const auto* date = std::get_if<IsoDate>(&*a.normalized)) {
                bool calendar_ok = date->year > 0;
                if (date->month && !date->day)
                    calendar_ok = calendar_ok && *date->month >= 1 && *date->month <= 12;
                if (date->day)
                    calendar_ok = calendar_ok && date->month &&
                                  days_in_month_ok(date->year, *date->month, *date->day);
                bool year_in_raw = a.value.find(std::to_string(date->year)) != std::string::npos;
                if (!calendar_ok || !year_in_raw)
                    add(rules::normalized_date_consistency, i,
                        "normalized date is not calendar-valid or contradicts the raw value");
            }
        }
    }
    if (titles != 1)
        add(rules::title_cardinality, std::nullopt,
            "record has " + std::to_string(titles) + " Title assertions, needs exactly 1");
    if (identifiers != 1)
        add(rules::identifier_cardinality, std::nullopt,
            "record has " + std::to_string(identifiers) + " Identifier assertions, needs exactly 1");
    else if (record.record_id != identifier_value)
        add(rules::record_id_mirror, std::nullopt,
            "record id '" + record.record_id + "' does not mirror the Identifier value '" +
                identifier_value + "'");

    if (record.digital_counterpart) {
        const auto& url = *record.digital_counterpart;
        auto colon = url.find(':');
        bool absolute = colon != std::string::npos && colon > 0 &&
                        std::isalpha(static_cast<unsigned char>(url[0])) != 0;
        if (!absolute)
            add(rules::digital_counterpart_url, std::nullopt,
                "digital counterpart '" + url + "' is not an absolute URL");
    }
    for (const auto& e : record.extensions) {
        if (property_from_name(e.key))
            add(rules::extension_key_collision, std::nullopt,
                "extension key '" + e.key + "' collides with a pivot property name");
    }
    return out;
}

PivotRecord normalize_dates(PivotRecord record) {
    for (auto& a : record.assertions) {
        if (a.property != PivotProperty::CreationDate && a.property != PivotProperty::RelatedDate)
            continue;
        const std::string& v = a.value;
        if (v.size() == 4 && all_digits(v)) {
            a.normalized = NormalizedValue{IsoDate{std::stoi(v), std::nullopt, std::nullopt}};
        } else if (v.size() == 10 && v[2] == '.' && v[5] == '.' && all_digits(v.substr(0, 2)) &&
                   all_digits(v.substr(3, 2)) && all_digits(v.substr(6, 4))) {
            int day = std::stoi(v.substr(0, 2));
            int month = std::stoi(v.substr(3, 2));
            int year = std::stoi(v.substr(6, 4));
            if (days_in_month_ok(year, month, day))
                a.normalized = NormalizedValue{IsoDate{year, month, day}};
        }
    }
    return record;
}

PivotRecord normalize_languages(PivotRecord record, const std::map<std::string, std::string>& extra) {
    static const std::map<std::string, std::string> builtin = {
        {"German", "de"}, {"Polish", "pl"}, {"French", "fr"}};
    for (auto& a : record.assertions) {
        if (a.property != PivotProperty::Language) continue;
        auto hit = extra.find(a.value);
        if (hit == extra.end()) {
            hit = builtin.find(a.value);
            if (hit == builtin.end()) continue;
        }
        a.normalized = NormalizedValue{LanguageCode{hit->second}};
    }
    return record;
}

} // namespace crosswalk
