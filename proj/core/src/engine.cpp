#include "crosswalk/engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "crosswalk/codecs.hpp"
#include "crosswalk/errors.hpp"

namespace crosswalk {

namespace {

bool is_corporate(const PropertyAssertion& assertion) {
    if (!assertion.normalized) return false;
    const auto* kind = std::get_if<AgentKind>(&*assertion.normalized);
    return kind && *kind == AgentKind::Corporate;
}

const ElementPath* find_option(const MappingRule& rule, std::string_view leading_segment) {
    for (const auto& option : rule.paths)
        if (option.path.front() == leading_segment) return &option;
    return nullptr;
}

std::string qualifier_loss_note(const Qualifier& qualifier, Standard standard) {
    return "qualifier '" + qualifier_label(qualifier) + "' has no representation in " +
           std::string(standard_display_name(standard)) + "; the value is emitted without it";
}

} // namespace

bool LossReport::conserves() const {
    return total_assertions ==
           converted_count + dropped.size() + approximated.size() + alternative_resolved.size();
}

ConversionResult map_forward(const PivotRecord& record, Standard standard,
                             const CrosswalkTable& table, const ForwardOptions& options) {
    auto violations = validate_pivot(record);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "record '" << record.record_id << "' does not validate:";
        for (const auto& v : violations) msg << " [" << v.rule << "] " << v.message << ";";
        throw SchemaViolationError(msg.str());
    }

    ConversionResult result;
    result.model.standard = standard;
    result.model.record_uri = mint_uri(record.record_id, options.base_uri);
    result.report.record_id = record.record_id;
    result.report.standard = standard;
    result.report.total_assertions = record.assertions.size();

    auto emit = [&result](const ElementPath& path, const std::string& value,
                          std::optional<PivotProperty> source) {
        result.model.nodes.push_back({path, value, {}});
        result.node_sources.push_back(source);
    };

    // Controlled edm:type companion values, in first-appearance order.
    std::vector<std::string> controlled_types;
    auto controlled_type_for = [&options](const std::string& value) {
        auto hit = options.edm_type_lookup.find(value);
        return hit == options.edm_type_lookup.end() ? options.default_edm_type : hit->second;
    };

    for (const auto& assertion : record.assertions) {
        const auto& rule = table.rule(assertion.property, standard);
        switch (rule.kind) {
        case MappingKindTag::Unmappable:
            result.report.dropped.push_back({assertion, "unmappable"});
            break;
        case MappingKindTag::Exact:
        case MappingKindTag::Composite:
            for (const auto& path : rule.paths) emit(path, assertion.value, assertion.property);
            if (assertion.qualifier) {
                result.report.approximated.push_back(
                    {assertion, rule.paths.front(),
                     qualifier_loss_note(*assertion.qualifier, standard)});
            } else {
                ++result.report.converted_count;
            }
            break;
        case MappingKindTag::Approximate: {
            emit(rule.paths.front(), assertion.value, assertion.property);
            std::string note = rule.note;
            if (assertion.qualifier)
                note += "; qualifier '" + qualifier_label(*assertion.qualifier) +
                        "' is not represented either";
            result.report.approximated.push_back({assertion, rule.paths.front(), std::move(note)});
            break;
        }
        case MappingKindTag::Alternative: {
            const ElementPath* target = nullptr;
            std::string approx_note;
            if (rule.resolver) {
                // Corporate authors route to <corpname> via the normalized
                // agent-kind flag; qualifiers route through the resolver.
                if (const ElementPath* corp = find_option(rule, "corpname");
                    corp && is_corporate(assertion)) {
                    target = corp;
                } else {
                    const RoleRoute* route = rule.resolver->route_for(assertion.qualifier);
                    if (!route)
                        throw UnknownQualifierError(
                            "no route for qualifier '" +
                            (assertion.qualifier ? qualifier_label(*assertion.qualifier)
                                                 : std::string("<none>")) +
                            "' on " + std::string(property_name(assertion.property)) + " -> " +
                            std::string(standard_token(standard)));
                    target = &route->target;
                    approx_note = route->approx_note;
                }
            } else {
                target = &rule.paths[rule.fixed_priority];
            }
            emit(*target, assertion.value, assertion.property);
            if (standard == Standard::EDM && assertion.property == PivotProperty::TypeOfDocument) {
                auto controlled = controlled_type_for(assertion.value);
                if (std::find(controlled_types.begin(), controlled_types.end(), controlled) ==
                    controlled_types.end())
                    controlled_types.push_back(controlled);
            }
            if (!approx_note.empty()) {
                result.report.approximated.push_back({assertion, *target, std::move(approx_note)});
            } else {
                result.report.alternative_resolved.push_back({assertion, *target, rule.paths});
            }
            break;
        }
        }
    }

    if (standard == Standard::EDM) {
        for (const auto& controlled : controlled_types)
            emit(ElementPath{Standard::EDM, {"edm:type"}, {}}, controlled,
                 PivotProperty::TypeOfDocument);
        if (record.digital_counterpart) {
            result.model.nodes.push_back(
                {ElementPath{Standard::EDM, {"edm:isShownBy"}, {}},
                 *record.digital_counterpart,
                 {{std::string(annotations::object), std::string(annotations::object_resource)}}});
            result.node_sources.push_back(std::nullopt);
        }
    }
    return result;
}

namespace {

struct ReverseIndex {
    // Rendered path -> candidate properties, best reading first.
    std::map<std::string, std::vector<PivotProperty>> by_path;

    const std::vector<PivotProperty>* lookup(const ElementPath& path) const {
        if (auto hit = by_path.find(path.render()); hit != by_path.end()) return &hit->second;
        if (!path.attributes.empty()) {
            // Fall back to the attribute-free reading.
            ElementPath bare = path;
            bare.attributes.clear();
            if (auto hit = by_path.find(bare.render()); hit != by_path.end()) return &hit->second;
        }
        return nullptr;
    }
};

ReverseIndex build_reverse_index(const CrosswalkTable& table, Standard standard) {
    ReverseIndex index;
    for (auto property : all_properties()) {
        const auto& rule = table.rule(property, standard);
        if (rule.kind == MappingKindTag::Unmappable || rule.forward_only) continue;
        for (const auto& option : rule.paths) {
            auto& candidates = index.by_path[option.render()];
            if (std::find(candidates.begin(), candidates.end(), property) == candidates.end())
                candidates.push_back(property);
        }
    }
    for (auto& [path, candidates] : index.by_path) std::sort(candidates.begin(), candidates.end());

    if (standard == Standard::EAD) {
        // A bare person name reads as a related person; authorship needs an
        // origination context. Geographic and person names inside
        // <origination> read as origin data.
        index.by_path["<persname>"] = {PivotProperty::RelatedPerson, PivotProperty::Author};
        index.by_path["<origination><persname>"] = {PivotProperty::Author,
                                                    PivotProperty::RelatedPerson};
        index.by_path["<origination><corpname>"] = {PivotProperty::Author};
        index.by_path["<origination><geogname>"] = {PivotProperty::PlaceOfOrigin,
                                                    PivotProperty::RelatedPlace};
    }
    return index;
}

} // namespace

BackwardResult map_backward(const TargetModel& model, const CrosswalkTable& table) {
    BackwardResult result;
    ReverseIndex index = build_reverse_index(table, model.standard);

    for (std::size_t i = 0; i < model.nodes.size(); ++i) {
        const auto& node = model.nodes[i];
        const auto& segments = node.path.path;
        if (!segments.empty() && segments.front() == kUnknownSegment) {
            std::string key = "x-" + std::string(standard_token(model.standard)) + ":";
            for (std::size_t s = 1; s < segments.size(); ++s) {
                if (s > 1) key += '/';
                key += segments[s];
            }
            result.record.extensions.push_back({std::move(key), node.value});
            continue;
        }
        if (model.standard == Standard::EDM && segments.size() == 1 &&
            segments.front() == "edm:isShownBy") {
            if (!result.record.digital_counterpart)
                result.record.digital_counterpart = node.value;
            continue;
        }
        const auto* candidates = index.lookup(node.path);
        if (!candidates || candidates->empty()) {
            // Recognized vocabulary without an invertible rule (forward-only
            // cells) survives as an extension rather than being discarded.
            result.record.extensions.push_back(
                {"x-" + std::string(standard_token(model.standard)) + ":" + node.path.render(),
                 node.value});
            continue;
        }
        PropertyAssertion assertion;
        assertion.property = candidates->front();
        assertion.value = node.value;
        result.record.assertions.push_back(std::move(assertion));
        if (candidates->size() > 1) {
            Ambiguity ambiguity;
            ambiguity.node_index = i;
            ambiguity.path = node.path;
            ambiguity.chosen = candidates->front();
            ambiguity.alternatives.assign(candidates->begin() + 1, candidates->end());
            result.ambiguities.push_back(std::move(ambiguity));
        }
    }

    for (const auto& assertion : result.record.assertions) {
        if (assertion.property == PivotProperty::Identifier) {
            result.record.record_id = assertion.value;
            break;
        }
    }
    return result;
}

} // namespace crosswalk
