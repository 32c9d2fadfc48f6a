#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace crosswalk {

/// The 21 properties of the pivot schema. The set is closed: extension data
/// lives in PivotRecord::extensions under keys that never reuse these names.
enum class PivotProperty {
    Title,
    AlternativeTitle,
    Author,
    TypeOfDocument,
    Language,
    Identifier,
    PhysicalExtent,
    MaterialInformation,
    PlaceOfOrigin,
    CreationDate,
    CurrentLocation,
    CustodyHistory,
    Publisher,
    OtherEditions,
    RelatedDate,
    RelatedPlace,
    RelatedPerson,
    ExternalLink,
    DescriptionNotes,
    TypographyNote,
    Keywords,
};

inline constexpr std::size_t kPivotPropertyCount = 21;

std::span<const PivotProperty> all_properties();

/// Canonical UpperCamelCase name used in the interchange format.
std::string_view property_name(PivotProperty p);

/// Human-readable label, e.g. "Description / Notes".
std::string_view property_display_name(PivotProperty p);

std::optional<PivotProperty> property_from_name(std::string_view name);

/// Role a related person plays with respect to the object. Closed set.
enum class AgentRole { Sender, Receiver, Creator, Artist, Deceased, Mentioned, Depicted };

/// Closed event kinds for related dates; open labels go through OtherDateKind.
enum class DateKind { Event, DateOfDeath, DateOfFuneral };

/// Closed event kinds for related places; open labels go through OtherPlaceKind.
enum class PlaceKind { SenderLocation, EventPlace };

struct OtherDateKind {
    std::string label; // non-empty
    bool operator==(const OtherDateKind&) const = default;
};

struct OtherPlaceKind {
    std::string label; // non-empty
    bool operator==(const OtherPlaceKind&) const = default;
};

/// Qualifier of an assertion: agent role on RelatedPerson, event kind on
/// RelatedDate / RelatedPlace. No other property carries one.
using Qualifier = std::variant<AgentRole, DateKind, PlaceKind, OtherDateKind, OtherPlaceKind>;

/// Text form used both as the value prefix ("Sender: ...") and as the
/// interchange "qualifier" field ("Sender", "Date of death", ...).
std::string qualifier_label(const Qualifier& q);

/// True if the qualifier's category belongs on the given property.
bool qualifier_allowed_on(PivotProperty p, const Qualifier& q);

/// Maps a label to a qualifier for the given property. Unknown labels yield
/// Other(label) kinds on RelatedDate/RelatedPlace and nullopt on
/// RelatedPerson (agent roles are closed) and on non-qualifiable properties.
std::optional<Qualifier> qualifier_from_label(PivotProperty p, std::string_view label);

/// A calendar-valid date annotation. Year is mandatory, finer fields optional.
struct IsoDate {
    int year = 0;
    std::optional<int> month;
    std::optional<int> day;
    bool operator==(const IsoDate&) const = default;
};

/// ISO 639-1 code annotated on a Language assertion.
struct LanguageCode {
    std::string code;
    bool operator==(const LanguageCode&) const = default;
};

/// Heuristic flag on Author assertions routing EAD output to <persname>
/// or <corpname>. Defaults to Personal when absent.
enum class AgentKind { Personal, Corporate };

using NormalizedValue = std::variant<IsoDate, LanguageCode, AgentKind>;

/// One (property, value, qualifier) statement. The value is the cataloger's
/// text, verbatim; normalization never rewrites it, only annotates.
struct PropertyAssertion {
    PivotProperty property = PivotProperty::Title;
    std::string value;
    std::optional<Qualifier> qualifier;
    std::optional<NormalizedValue> normalized;
    bool operator==(const PropertyAssertion&) const = default;
};

struct Extension {
    std::string key;   // namespace-qualified, never one of the 21 names
    std::string value;
    bool operator==(const Extension&) const = default;
};

/// One cultural-heritage object. digital_counterpart identifies the
/// digitization and is kept apart from ExternalLink assertions, which
/// relate the physical object to other resources.
struct PivotRecord {
    std::string record_id; // mirrors the Identifier assertion's value
    std::vector<PropertyAssertion> assertions;
    std::optional<std::string> digital_counterpart; // absolute URL
    std::vector<Extension> extensions;
    bool operator==(const PivotRecord&) const = default;
};

/// A broken record invariant. `rule` is a stable identifier, `assertion_index`
/// points into PivotRecord::assertions when the violation is local to one.
struct Violation {
    std::string rule;
    std::optional<std::size_t> assertion_index;
    std::string message;
    bool operator==(const Violation&) const = default;
};

// Stable rule identifiers reported by validate_pivot.
namespace rules {
inline constexpr std::string_view title_cardinality = "title-cardinality";
inline constexpr std::string_view identifier_cardinality = "identifier-cardinality";
inline constexpr std::string_view record_id_mirror = "record-id-mirror";
inline constexpr std::string_view empty_value = "empty-value";
inline constexpr std::string_view qualifier_placement = "qualifier-placement";
inline constexpr std::string_view qualifier_empty_label = "qualifier-empty-label";
inline constexpr std::string_view digital_counterpart_url = "digital-counterpart-url";
inline constexpr std::string_view extension_key_collision = "extension-key-collision";
inline constexpr std::string_view normalized_placement = "normalized-placement";
inline constexpr std::string_view normalized_date_consistency = "normalized-date-consistency";
} // namespace rules

/// Parses an interchange document into a record satisfying all invariants.
///
/// Multi-valued entries are split on ';' into one assertion per piece, and
/// known qualifier prefixes ("Sender: ", "Event place: ") are parsed off the
/// value. Throws MalformedDocumentError on bad JSON, EmptyValueError on an
/// empty value, SchemaViolationError on everything else.
PivotRecord parse_pivot(std::string_view document);

/// Parses document structure without enforcing record invariants, so that
/// validate_pivot can report them. Still rejects unreadable JSON, unknown
/// property names and empty values.
PivotRecord parse_pivot_lenient(std::string_view document);

/// Serializes to the interchange format. parse_pivot(serialize_pivot(r))
/// is structurally equal to r for every invariant-satisfying record whose
/// values avoid the reserved ';' separator and qualifier prefixes;
/// qualifiers are written to the explicit "qualifier" field.
std::string serialize_pivot(const PivotRecord& record);

/// Returns every broken invariant; empty iff the record is valid.
std::vector<Violation> validate_pivot(const PivotRecord& record);

/// Annotates CreationDate/RelatedDate assertions whose raw value matches
/// DD.MM.YYYY or YYYY with an IsoDate. Non-matching values stay untouched;
/// raw text is never rewritten. Idempotent.
PivotRecord normalize_dates(PivotRecord record);

/// Annotates Language assertions via a label -> ISO 639-1 lookup. The
/// built-in table knows German/Polish/French; `extra` extends or overrides
/// it. Unknown labels pass through without annotation. Idempotent.
PivotRecord normalize_languages(PivotRecord record,
                                const std::map<std::string, std::string>& extra = {});

} // namespace crosswalk
