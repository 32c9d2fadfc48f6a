#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crosswalk::detail {

/// Element tree produced by the minimal XML reader. `text` holds the
/// verbatim decoded content of childless elements; elements with children
/// instead collect their non-whitespace direct text chunks in `mixed_text`.
struct XmlElement {
    std::string name; // as written, possibly prefixed
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<XmlElement> children;
    std::string text;
    std::vector<std::string> mixed_text;

    /// Name with any "prefix:" stripped.
    std::string_view local_name() const;
    const std::string* attribute(std::string_view name) const;
};

/// Parses one XML document: prolog, comments, CDATA, the five predefined
/// entities and numeric character references. No DTD processing. Throws
/// MalformedDocumentError on anything that does not parse.
XmlElement parse_xml(std::string_view bytes);

std::string xml_escape_text(std::string_view text);
std::string xml_escape_attribute(std::string_view text);

} // namespace crosswalk::detail
