#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosswalk/pivot.hpp"

namespace crosswalk {

/// The five target standards, in rule-table column order.
enum class Standard { DublinCore, EAD, MODS, EDM, DigitalScriptorium };

inline constexpr std::size_t kStandardCount = 5;

std::span<const Standard> all_standards();

/// Machine token used in CSV headers, CLI flags and extension keys:
/// "dublin_core", "ead", "mods", "edm", "digital_scriptorium".
std::string_view standard_token(Standard s);

/// Display name, e.g. "Digital Scriptorium".
std::string_view standard_display_name(Standard s);

std::optional<Standard> standard_from_token(std::string_view token);

/// True for the XML standards (EAD, MODS).
bool standard_is_xml(Standard s);

/// Path to a value slot in one standard: nested element names for XML,
/// a single prefixed term for RDF, a display-field name for DS. Attributes
/// belong to the final path segment.
struct ElementPath {
    Standard standard = Standard::DublinCore;
    std::vector<std::string> path;
    std::vector<std::pair<std::string, std::string>> attributes;

    bool operator==(const ElementPath&) const = default;

    /// Canonical rendering: "<physdesc><extent>", "<titleInfo type="alternative">",
    /// "dc:title", "Holding Institution".
    std::string render() const;
};

enum class MappingKindTag { Exact, Approximate, Alternative, Composite, Unmappable };

std::string_view mapping_kind_name(MappingKindTag k);

/// Routes a qualified assertion to one of an Alternative rule's options.
/// `approx_note` non-empty marks the route as a semantic approximation.
struct RoleRoute {
    ElementPath target;
    std::string approx_note;
};

/// Qualifier-driven resolver for Alternative cells. Keys are qualifier
/// labels; `unqualified` serves assertions with no qualifier; `fallback`,
/// when present, serves qualifiers not listed in `routes` (without it such
/// an assertion is an UnknownQualifierError).
struct RoleResolver {
    std::vector<std::pair<std::string, RoleRoute>> routes;
    RoleRoute unqualified;
    std::optional<RoleRoute> fallback;

    const RoleRoute* route_for(const std::optional<Qualifier>& q) const;
};

/// One cell of the crosswalk table.
///
/// paths holds one entry for Exact/Approximate, the ordered options for
/// Alternative, every part for Composite, and nothing for Unmappable.
/// Alternative cells resolve via `resolver` when present, otherwise via
/// `fixed_priority` (an index into paths).
struct MappingRule {
    PivotProperty property = PivotProperty::Title;
    Standard standard = Standard::DublinCore;
    MappingKindTag kind = MappingKindTag::Unmappable;
    std::vector<ElementPath> paths;
    std::string note; // required for Approximate
    std::optional<RoleResolver> resolver;
    std::size_t fixed_priority = 0;
    bool forward_only = false;

    /// Cell text as it appears in the coverage matrix ("--" for Unmappable).
    std::string render_cell() const;
};

/// Immutable, total rule table: exactly one rule per (property, standard).
class CrosswalkTable {
public:
    /// Validates totality and uniqueness; throws SchemaViolationError when
    /// the rule set is not exactly one rule per pair.
    explicit CrosswalkTable(std::vector<MappingRule> rules);

    const MappingRule& rule(PivotProperty p, Standard s) const;
    std::span<const MappingRule> rules() const { return rules_; }

private:
    std::vector<MappingRule> rules_; // indexed property-major
};

/// The built-in 105-rule table.
const CrosswalkTable& builtin_table();

/// Properties whose forward mapping into `s` inverts losslessly: rule is
/// Exact, not forward-only, the property takes no qualifier, and no other
/// property can emit the same target path. Computed from the table.
std::vector<PivotProperty> lossless_roundtrip_properties(const CrosswalkTable& table, Standard s);

} // namespace crosswalk
