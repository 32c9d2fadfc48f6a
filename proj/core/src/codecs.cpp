#include "crosswalk/codecs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "crosswalk/errors.hpp"
#include "turtle_mini.hpp"
#include "uri.hpp"
#include "xml_mini.hpp"

namespace crosswalk {

namespace {

using detail::TurtleDocument;
using detail::TurtleTerm;
using detail::XmlElement;
using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kEadNamespace = "urn:isbn:1-931666-22-9";
constexpr std::string_view kModsNamespace = "http://www.loc.gov/mods/v3";
constexpr std::string_view kDcNamespace = "http://purl.org/dc/elements/1.1/";
constexpr std::string_view kDctermsNamespace = "http://purl.org/dc/terms/";
constexpr std::string_view kEdmNamespace = "http://www.europeana.eu/schemas/edm/";
constexpr std::string_view kRdfTypeIri = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
constexpr std::string_view kProvidedChoTerm = "edm:ProvidedCHO";
constexpr std::string_view kWebResourceTerm = "edm:WebResource";
constexpr std::string_view kIsShownByTerm = "edm:isShownBy";
constexpr std::string_view kFallbackRecordUri = "urn:x-crosswalk:record";

std::string_view xml_root_name(Standard s) { return s == Standard::EAD ? "ead" : "mods"; }

std::string_view xml_namespace(Standard s) {
    return s == Standard::EAD ? kEadNamespace : kModsNamespace;
}

/// Name paths (attribute-free) the standard's XML vocabulary recognizes.
const std::set<std::vector<std::string>>& xml_vocabulary(Standard s) {
    static const auto build = [](Standard standard) {
        std::set<std::vector<std::string>> paths;
        for (const auto& rule : builtin_table().rules())
            if (rule.standard == standard)
                for (const auto& path : rule.paths) paths.insert(path.path);
        if (standard == Standard::EAD) {
            // Origination wrappers carry author/origin context on decode.
            paths.insert({"origination", "persname"});
            paths.insert({"origination", "corpname"});
            paths.insert({"origination", "geogname"});
        }
        return paths;
    };
    static const std::set<std::vector<std::string>> ead = build(Standard::EAD);
    static const std::set<std::vector<std::string>> mods = build(Standard::MODS);
    return s == Standard::EAD ? ead : mods;
}

/// Prefixed terms the standard's RDF vocabulary recognizes.
const std::set<std::string>& rdf_vocabulary(Standard s) {
    static const auto build = [](Standard standard) {
        std::set<std::string> terms;
        for (const auto& rule : builtin_table().rules())
            if (rule.standard == standard)
                for (const auto& path : rule.paths) terms.insert(path.path.front());
        if (standard == Standard::EDM) terms.insert(std::string(kIsShownByTerm));
        return terms;
    };
    static const std::set<std::string> dc = build(Standard::DublinCore);
    static const std::set<std::string> edm = build(Standard::EDM);
    return s == Standard::DublinCore ? dc : edm;
}

const std::set<std::string>& ds_vocabulary() {
    static const auto fields = [] {
        std::set<std::string> out;
        for (const auto& rule : builtin_table().rules())
            if (rule.standard == Standard::DigitalScriptorium)
                for (const auto& path : rule.paths) out.insert(path.path.front());
        return out;
    }();
    return fields;
}

bool is_unknown_path(const ElementPath& path) {
    return !path.path.empty() && path.path.front() == kUnknownSegment;
}

bool has_resource_annotation(const ModelNode& node) {
    for (const auto& [name, value] : node.annotations)
        if (name == annotations::object && value == annotations::object_resource) return true;
    return false;
}

void check_encodable(const TargetModel& model) {
    for (const auto& node : model.nodes) {
        if (node.path.standard != model.standard)
            throw InvalidPathError("node path belongs to " +
                                   std::string(standard_token(node.path.standard)) +
                                   ", model is " + std::string(standard_token(model.standard)));
        if (node.path.path.empty() || is_unknown_path(node.path))
            throw InvalidPathError("cannot encode unknown-vocabulary node '" + node.path.render() +
                                   "'");
        bool known = false;
        if (standard_is_xml(model.standard)) {
            known = xml_vocabulary(model.standard).count(node.path.path) > 0;
        } else if (model.standard == Standard::DigitalScriptorium) {
            known = node.path.path.size() == 1 && ds_vocabulary().count(node.path.path.front()) > 0;
        } else {
            known = node.path.path.size() == 1 &&
                    rdf_vocabulary(model.standard).count(node.path.path.front()) > 0;
        }
        if (!known)
            throw InvalidPathError("path '" + node.path.render() + "' is not in the " +
                                   std::string(standard_token(model.standard)) + " vocabulary");
    }
}

// --- XML ---------------------------------------------------------------

std::string encode_xml(const TargetModel& model) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += '<';
    out += xml_root_name(model.standard);
    out += " xmlns=\"";
    out += xml_namespace(model.standard);
    out += "\" xml:base=\"";
    out += detail::xml_escape_attribute(model.record_uri);
    out += "\">\n";
    for (const auto& node : model.nodes) {
        const auto& segments = node.path.path;
        std::string indent = "  ";
        for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
            out += indent + "<" + segments[i] + ">\n";
            indent += "  ";
        }
        out += indent + "<" + segments.back();
        for (const auto& [name, value] : node.path.attributes)
            out += " " + name + "=\"" + detail::xml_escape_attribute(value) + "\"";
        out += ">" + detail::xml_escape_text(node.value) + "</" + segments.back() + ">\n";
        for (std::size_t i = segments.size() - 1; i-- > 0;) {
            indent.resize(indent.size() - 2);
            out += indent + "</" + segments[i] + ">\n";
        }
    }
    out += "</";
    out += xml_root_name(model.standard);
    out += ">\n";
    return out;
}

void collect_xml_nodes(const XmlElement& element, std::vector<std::string>& path,
                       TargetModel& model) {
    path.emplace_back(element.local_name());
    std::vector<std::pair<std::string, std::string>> attrs;
    for (const auto& [name, value] : element.attributes)
        if (name != "xmlns" && name.rfind("xmlns:", 0) != 0) attrs.emplace_back(name, value);

    auto make_path = [&](std::vector<std::string> segments) {
        ElementPath p;
        p.standard = model.standard;
        if (xml_vocabulary(model.standard).count(segments) == 0)
            segments.insert(segments.begin(), std::string(kUnknownSegment));
        p.path = std::move(segments);
        p.attributes = attrs;
        return p;
    };

    if (element.children.empty()) {
        model.nodes.push_back({make_path(path), element.text, {}});
    } else {
        for (const auto& chunk : element.mixed_text)
            model.nodes.push_back({make_path(path), chunk, {}});
        for (const auto& child : element.children) collect_xml_nodes(child, path, model);
    }
    path.pop_back();
}

TargetModel decode_xml(const Document& document) {
    XmlElement root = detail::parse_xml(document.bytes);
    if (root.local_name() != xml_root_name(document.standard))
        throw WrongStandardError("expected root <" + std::string(xml_root_name(document.standard)) +
                                 ">, found <" + root.name + ">");
    if (const auto* ns = root.attribute("xmlns"); ns && *ns != xml_namespace(document.standard))
        throw WrongStandardError("root namespace '" + *ns + "' does not match " +
                                 std::string(standard_token(document.standard)));
    TargetModel model;
    model.standard = document.standard;
    const auto* base = root.attribute("xml:base");
    model.record_uri = base ? *base : std::string(kFallbackRecordUri);
    std::vector<std::string> path;
    for (const auto& chunk : root.mixed_text)
        model.nodes.push_back({ElementPath{model.standard,
                                           {std::string(kUnknownSegment), root.name},
                                           {}},
                               chunk,
                               {}});
    if (root.children.empty() && !root.text.empty())
        model.nodes.push_back({ElementPath{model.standard,
                                           {std::string(kUnknownSegment), root.name},
                                           {}},
                               root.text,
                               {}});
    for (const auto& child : root.children) collect_xml_nodes(child, path, model);
    return model;
}

// --- Turtle ------------------------------------------------------------

std::string encode_turtle(const TargetModel& model) {
    std::string out;
    out += "@prefix dc: <" + std::string(kDcNamespace) + "> .\n";
    out += "@prefix dcterms: <" + std::string(kDctermsNamespace) + "> .\n";
    if (model.standard == Standard::EDM)
        out += "@prefix edm: <" + std::string(kEdmNamespace) + "> .\n";
    out += '\n';

    std::string subject = "<" + model.record_uri + ">";
    std::vector<std::string> web_resources;
    if (model.standard == Standard::EDM)
        out += subject + " a " + std::string(kProvidedChoTerm) + " .\n";
    for (const auto& node : model.nodes) {
        out += subject + ' ' + node.path.path.front() + ' ';
        if (has_resource_annotation(node)) {
            out += '<' + node.value + '>';
            if (node.path.path.front() == kIsShownByTerm) web_resources.push_back(node.value);
        } else {
            out += '"' + detail::turtle_escape_literal(node.value) + '"';
        }
        out += " .\n";
    }
    for (const auto& web : web_resources)
        out += '<' + web + "> a " + std::string(kWebResourceTerm) + " .\n";
    return out;
}

/// Canonical "dc:x" / "dcterms:x" / "edm:x" form of a full IRI; empty when
/// the IRI is outside the three namespaces.
std::string canonical_rdf_term(const std::string& iri) {
    for (auto [prefix, ns] : {std::pair<std::string_view, std::string_view>{"dc", kDcNamespace},
                              {"dcterms", kDctermsNamespace},
                              {"edm", kEdmNamespace}}) {
        if (iri.rfind(ns, 0) == 0)
            return std::string(prefix) + ":" + iri.substr(ns.size());
    }
    return {};
}

TargetModel decode_turtle(const Document& document) {
    TurtleDocument turtle = detail::parse_turtle(document.bytes);
    TargetModel model;
    model.standard = document.standard;

    // The record subject: the ProvidedCHO-typed subject when present,
    // otherwise the subject of the first triple.
    std::string record_subject;
    std::set<std::string> web_subjects;
    for (const auto& triple : turtle.triples) {
        if (turtle.expand(triple.predicate) != kRdfTypeIri) continue;
        auto object_term = canonical_rdf_term(turtle.expand(triple.object));
        if (object_term == kProvidedChoTerm && record_subject.empty())
            record_subject = turtle.expand(triple.subject);
        if (object_term == kWebResourceTerm) web_subjects.insert(turtle.expand(triple.subject));
    }
    if (record_subject.empty() && !turtle.triples.empty())
        record_subject = turtle.expand(turtle.triples.front().subject);
    model.record_uri = record_subject.empty() ? std::string(kFallbackRecordUri) : record_subject;

    const auto& vocabulary = rdf_vocabulary(document.standard);
    for (const auto& triple : turtle.triples) {
        if (turtle.expand(triple.predicate) == kRdfTypeIri) continue; // structural
        auto subject = turtle.expand(triple.subject);
        bool object_is_literal = triple.object.kind == TurtleTerm::Kind::Literal;
        std::string object_text =
            object_is_literal ? triple.object.text : turtle.expand(triple.object);

        if (subject != record_subject) {
            // Statements about other subjects are preserved, not understood.
            ElementPath path{model.standard,
                             {std::string(kUnknownSegment), "<" + subject + ">",
                              triple.predicate.text},
                             {}};
            model.nodes.push_back({std::move(path), object_text, {}});
            continue;
        }
        auto term = canonical_rdf_term(turtle.expand(triple.predicate));
        ModelNode node;
        if (!term.empty() && vocabulary.count(term) > 0) {
            node.path = ElementPath{model.standard, {term}, {}};
        } else {
            node.path = ElementPath{
                model.standard, {std::string(kUnknownSegment), triple.predicate.text}, {}};
        }
        node.value = object_text;
        if (!object_is_literal)
            node.annotations.emplace_back(std::string(annotations::object),
                                          std::string(annotations::object_resource));
        model.nodes.push_back(std::move(node));
    }
    return model;
}

// --- Digital Scriptorium -----------------------------------------------

std::string encode_ds(const TargetModel& model) {
    ordered_json out;
    out["@id"] = model.record_uri;
    for (const auto& node : model.nodes) {
        const auto& field = node.path.path.front();
        if (!out.contains(field)) {
            out[field] = node.value;
        } else if (out[field].is_string()) {
            ordered_json list = ordered_json::array();
            list.push_back(out[field]);
            list.push_back(node.value);
            out[field] = std::move(list);
        } else {
            out[field].push_back(node.value);
        }
    }
    return out.dump(2) + "\n";
}

TargetModel decode_ds(const Document& document) {
    ordered_json j;
    try {
        j = ordered_json::parse(document.bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedDocumentError(std::string("DS document is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw WrongStandardError("DS document must be a JSON object");
    TargetModel model;
    model.standard = Standard::DigitalScriptorium;
    model.record_uri = std::string(kFallbackRecordUri);
    for (const auto& [key, value] : j.items()) {
        if (key == "@id" && value.is_string()) {
            model.record_uri = value.get<std::string>();
            continue;
        }
        if (value.is_null()) continue;
        ElementPath path{Standard::DigitalScriptorium, {key}, {}};
        if (ds_vocabulary().count(key) == 0)
            path.path.insert(path.path.begin(), std::string(kUnknownSegment));
        auto add = [&](const ordered_json& item) {
            std::string text = item.is_string() ? item.get<std::string>() : item.dump();
            model.nodes.push_back({path, std::move(text), {}});
        };
        if (value.is_array()) {
            for (const auto& item : value) add(item);
        } else {
            add(value);
        }
    }
    return model;
}

} // namespace

MediaKind media_for(Standard s) {
    switch (s) {
    case Standard::EAD:
    case Standard::MODS: return MediaKind::Xml;
    case Standard::DublinCore:
    case Standard::EDM: return MediaKind::Turtle;
    case Standard::DigitalScriptorium: return MediaKind::Json;
    }
    return MediaKind::Xml;
}

Document encode(const TargetModel& model) {
    check_encodable(model);
    Document document;
    document.standard = model.standard;
    document.media = media_for(model.standard);
    switch (document.media) {
    case MediaKind::Xml: document.bytes = encode_xml(model); break;
    case MediaKind::Turtle: document.bytes = encode_turtle(model); break;
    case MediaKind::Json: document.bytes = encode_ds(model); break;
    }
    return document;
}

TargetModel decode(const Document& document) {
    if (document.media != media_for(document.standard))
        throw WrongStandardError("document media does not match " +
                                 std::string(standard_token(document.standard)));
    switch (document.media) {
    case MediaKind::Xml: return decode_xml(document);
    case MediaKind::Turtle: return decode_turtle(document);
    case MediaKind::Json: return decode_ds(document);
    }
    throw WrongStandardError("unsupported media kind");
}

std::string mint_uri(std::string_view record_id, std::string_view base) {
    if (!detail::is_absolute_uri(base) || base.empty() || base.back() != '/')
        throw InvalidBaseError("base '" + std::string(base) +
                               "' must be an absolute URI ending in '/'");
    return std::string(base) + detail::percent_encode(record_id);
}

} // namespace crosswalk
