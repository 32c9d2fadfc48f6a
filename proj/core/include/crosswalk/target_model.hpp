#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crosswalk/table.hpp"

namespace crosswalk {

// Annotation names used on model nodes.
namespace annotations {
/// ("object", "resource"): the node's value is a URI object, not a literal.
inline constexpr std::string_view object = "object";
inline constexpr std::string_view object_resource = "resource";
} // namespace annotations

/// First path segment of nodes decoded from content the standard's
/// vocabulary does not recognize. Never legal on encode.
inline constexpr std::string_view kUnknownSegment = "#unknown";

/// One value slot in a standard-specific tree.
struct ModelNode {
    ElementPath path;
    std::string value;
    std::vector<std::pair<std::string, std::string>> annotations;
    bool operator==(const ModelNode&) const = default;
};

/// Standard-neutral middle layer between the crosswalk and the wire
/// formats. Node order is meaningful and preserved by the codecs.
struct TargetModel {
    Standard standard = Standard::DublinCore;
    std::string record_uri; // absolute URI of the described object
    std::vector<ModelNode> nodes;
    bool operator==(const TargetModel&) const = default;
};

enum class MediaKind { Xml, Turtle, Json };

/// Wire form of one record in one standard.
struct Document {
    Standard standard = Standard::DublinCore;
    std::string bytes; // UTF-8
    MediaKind media = MediaKind::Xml;
};

/// The wire format each standard serializes to.
MediaKind media_for(Standard s);

} // namespace crosswalk
