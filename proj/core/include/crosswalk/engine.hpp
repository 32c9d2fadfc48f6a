#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crosswalk/pivot.hpp"
#include "crosswalk/table.hpp"
#include "crosswalk/target_model.hpp"

namespace crosswalk {

struct DroppedEntry {
    PropertyAssertion assertion;
    std::string reason; // "unmappable"
    bool operator==(const DroppedEntry&) const = default;
};

struct ApproximatedEntry {
    PropertyAssertion assertion;
    ElementPath target;
    std::string note;
    bool operator==(const ApproximatedEntry&) const = default;
};

struct AlternativeResolvedEntry {
    PropertyAssertion assertion;
    ElementPath target;
    std::vector<ElementPath> options;
    bool operator==(const AlternativeResolvedEntry&) const = default;
};

/// Audit trail of one forward conversion. Every input assertion lands in
/// exactly one bucket: silently converted (counted), dropped, approximated,
/// or alternative-resolved.
struct LossReport {
    std::string record_id;
    Standard standard = Standard::DublinCore;
    std::size_t total_assertions = 0;
    std::size_t converted_count = 0;
    std::vector<DroppedEntry> dropped;
    std::vector<ApproximatedEntry> approximated;
    std::vector<AlternativeResolvedEntry> alternative_resolved;

    bool lossy() const { return !dropped.empty(); }

    /// total == converted + dropped + approximated + alternative_resolved.
    bool conserves() const;
};

struct ForwardOptions {
    std::string base_uri = "https://example.org/ch/";
    /// TypeOfDocument value -> controlled edm:type value; misses fall back
    /// to `default_edm_type`.
    std::map<std::string, std::string> edm_type_lookup;
    std::string default_edm_type = "TEXT";
};

struct ConversionResult {
    TargetModel model;
    LossReport report;
    /// Pivot property that produced each node, parallel to model.nodes;
    /// nullopt for structural nodes (the edm:isShownBy link).
    std::vector<std::optional<PivotProperty>> node_sources;
};

/// Projects a record into one standard, applying the rule table cell by
/// cell. Qualifier-driven alternatives resolve through the rule's role
/// resolver, the rest through fixed priority. A qualifier that the target
/// cannot carry sends the assertion to the approximated bucket instead of
/// being silently discarded. Deterministic: equal inputs give equal output.
///
/// Throws SchemaViolationError when the record does not validate and
/// UnknownQualifierError when a resolver has no route for a qualifier.
ConversionResult map_forward(const PivotRecord& record, Standard standard,
                             const CrosswalkTable& table, const ForwardOptions& options = {});

/// A model node whose path is claimed by more than one pivot property.
struct Ambiguity {
    std::size_t node_index = 0;
    ElementPath path;
    PivotProperty chosen = PivotProperty::Title;
    std::vector<PivotProperty> alternatives;
};

struct BackwardResult {
    PivotRecord record;
    std::vector<Ambiguity> ambiguities;
};

/// Projects a model back into the pivot schema. Nodes matching one rule
/// become assertions; nodes matching several become an assertion under the
/// highest-priority reading plus an Ambiguity entry; unknown-prefixed and
/// forward-only nodes survive as extensions keyed "x-<standard>:<path>".
/// An edm:isShownBy node restores digital_counterpart.
BackwardResult map_backward(const TargetModel& model, const CrosswalkTable& table);

} // namespace crosswalk
