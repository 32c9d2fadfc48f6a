#include "crosswalk/table.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "crosswalk/errors.hpp"

namespace crosswalk {

namespace {

constexpr std::array<Standard, kStandardCount> kStandards = {
    Standard::DublinCore, Standard::EAD, Standard::MODS, Standard::EDM,
    Standard::DigitalScriptorium,
};

constexpr std::array<std::string_view, kStandardCount> kStandardTokens = {
    "dublin_core", "ead", "mods", "edm", "digital_scriptorium",
};

constexpr std::array<std::string_view, kStandardCount> kStandardDisplayNames = {
    "DublinCore", "EAD", "MODS", "EDM", "Digital Scriptorium",
};

} // namespace

std::span<const Standard> all_standards() { return kStandards; }

std::string_view standard_token(Standard s) {
    return kStandardTokens[static_cast<std::size_t>(s)];
}

std::string_view standard_display_name(Standard s) {
    return kStandardDisplayNames[static_cast<std::size_t>(s)];
}

std::optional<Standard> standard_from_token(std::string_view token) {
    for (std::size_t i = 0; i < kStandardTokens.size(); ++i)
        if (kStandardTokens[i] == token) return kStandards[i];
    return std::nullopt;
}

bool standard_is_xml(Standard s) { return s == Standard::EAD || s == Standard::MODS; }

std::string ElementPath::render() const {
    std::string out;
    if (standard_is_xml(standard)) {
        for (std::size_t i = 0; i < path.size(); ++i) {
            out += '<';
            out += path[i];
            if (i + 1 == path.size()) {
                for (const auto& [name, value] : attributes) {
                    out += ' ';
                    out += name;
                    out += "=\"";
                    out += value;
                    out += '"';
                }
            }
            out += '>';
        }
    } else {
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i) out += '/';
            out += path[i];
        }
    }
    return out;
}

std::string_view mapping_kind_name(MappingKindTag k) {
    switch (k) {
    case MappingKindTag::Exact: return "exact";
    case MappingKindTag::Approximate: return "approximate";
    case MappingKindTag::Alternative: return "alternative";
    case MappingKindTag::Composite: return "composite";
    case MappingKindTag::Unmappable: return "unmappable";
    }
    return "unmappable";
}

const RoleRoute* RoleResolver::route_for(const std::optional<Qualifier>& q) const {
    if (!q) return &unqualified;
    auto label = qualifier_label(*q);
    for (const auto& [key, route] : routes)
        if (key == label) return &route;
    if (fallback) return &*fallback;
    return nullptr;
}

std::string MappingRule::render_cell() const {
    if (kind == MappingKindTag::Unmappable) return "--";
    std::string out;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (i) out += " or ";
        out += paths[i].render();
    }
    return out;
}

CrosswalkTable::CrosswalkTable(std::vector<MappingRule> rules) {
    const std::size_t expected = kPivotPropertyCount * kStandardCount;
    if (rules.size() != expected)
        throw SchemaViolationError("crosswalk table needs exactly " + std::to_string(expected) +
                                   " rules, got " + std::to_string(rules.size()));
    rules_.resize(expected);
    std::vector<bool> seen(expected, false);
    for (auto& rule : rules) {
        auto index = static_cast<std::size_t>(rule.property) * kStandardCount +
                     static_cast<std::size_t>(rule.standard);
        if (seen[index])
            throw SchemaViolationError("duplicate rule for (" +
                                       std::string(property_name(rule.property)) + ", " +
                                       std::string(standard_token(rule.standard)) + ")");
        seen[index] = true;
        rules_[index] = std::move(rule);
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw SchemaViolationError("crosswalk table is not total");
}

const MappingRule& CrosswalkTable::rule(PivotProperty p, Standard s) const {
    return rules_[static_cast<std::size_t>(p) * kStandardCount + static_cast<std::size_t>(s)];
}

namespace {

ElementPath xml_path(Standard s, std::vector<std::string> segments,
                     std::vector<std::pair<std::string, std::string>> attributes = {}) {
    return ElementPath{s, std::move(segments), std::move(attributes)};
}

ElementPath term(Standard s, std::string name) {
    return ElementPath{s, {std::move(name)}, {}};
}

MappingRule exact(PivotProperty p, ElementPath path, bool forward_only = false) {
    MappingRule r;
    r.property = p;
    r.standard = path.standard;
    r.kind = MappingKindTag::Exact;
    r.paths = {std::move(path)};
    r.forward_only = forward_only;
    return r;
}

MappingRule approximate(PivotProperty p, ElementPath path, std::string note) {
    MappingRule r;
    r.property = p;
    r.standard = path.standard;
    r.kind = MappingKindTag::Approximate;
    r.paths = {std::move(path)};
    r.note = std::move(note);
    return r;
}

MappingRule unmappable(PivotProperty p, Standard s) {
    MappingRule r;
    r.property = p;
    r.standard = s;
    r.kind = MappingKindTag::Unmappable;
    return r;
}

MappingRule alternative_fixed(PivotProperty p, std::vector<ElementPath> options,
                              std::size_t priority = 0) {
    MappingRule r;
    r.property = p;
    r.standard = options.front().standard;
    r.kind = MappingKindTag::Alternative;
    r.paths = std::move(options);
    r.fixed_priority = priority;
    return r;
}

MappingRule alternative_role(PivotProperty p, std::vector<ElementPath> options,
                             RoleResolver resolver) {
    MappingRule r;
    r.property = p;
    r.standard = options.front().standard;
    r.kind = MappingKindTag::Alternative;
    r.paths = std::move(options);
    r.resolver = std::move(resolver);
    return r;
}

std::vector<MappingRule> build_rules() {
    using P = PivotProperty;
    const auto DC = Standard::DublinCore;
    const auto EAD = Standard::EAD;
    const auto MODS = Standard::MODS;
    const auto EDM = Standard::EDM;
    const auto DS = Standard::DigitalScriptorium;

    std::vector<MappingRule> rules;
    rules.reserve(kPivotPropertyCount * kStandardCount);

    // Title
    rules.push_back(exact(P::Title, term(DC, "dc:title")));
    rules.push_back(exact(P::Title, xml_path(EAD, {"unittitle"})));
    rules.push_back(exact(P::Title, xml_path(MODS, {"titleInfo"})));
    rules.push_back(exact(P::Title, term(EDM, "dc:title")));
    rules.push_back(exact(P::Title, term(DS, "Title")));

    // Alternative title
    rules.push_back(exact(P::AlternativeTitle, term(DC, "dcterms:alternative")));
    rules.push_back(unmappable(P::AlternativeTitle, EAD));
    rules.push_back(exact(P::AlternativeTitle,
                          xml_path(MODS, {"titleInfo"}, {{"type", "alternative"}})));
    rules.push_back(exact(P::AlternativeTitle, term(EDM, "dcterms:alternative")));
    rules.push_back(unmappable(P::AlternativeTitle, DS));

    // Author: EAD offers person and corporate name elements; an AgentKind
    // annotation on the assertion picks the element, personal by default.
    rules.push_back(exact(P::Author, term(DC, "dc:creator")));
    {
        RoleResolver author_names;
        author_names.unqualified = {xml_path(EAD, {"persname"}), ""};
        rules.push_back(
            alternative_role(P::Author, {xml_path(EAD, {"persname"}), xml_path(EAD, {"corpname"})},
                             std::move(author_names)));
    }
    rules.push_back(exact(P::Author, xml_path(MODS, {"name"})));
    rules.push_back(exact(P::Author, term(EDM, "dc:creator")));
    rules.push_back(exact(P::Author, term(DS, "Author")));

    // Type of document
    rules.push_back(exact(P::TypeOfDocument, term(DC, "dc:type")));
    rules.push_back(exact(P::TypeOfDocument, xml_path(EAD, {"controlaccess", "genreform"})));
    rules.push_back(exact(P::TypeOfDocument, xml_path(MODS, {"typeOfResource"})));
    rules.push_back(alternative_fixed(
        P::TypeOfDocument,
        {term(EDM, "dc:type"), term(EDM, "edm:hasType"), term(EDM, "edm:type")}, 0));
    rules.push_back(unmappable(P::TypeOfDocument, DS));

    // Language
    rules.push_back(exact(P::Language, term(DC, "dc:language")));
    rules.push_back(exact(P::Language, xml_path(EAD, {"langmaterial", "language"})));
    rules.push_back(exact(P::Language, xml_path(MODS, {"language"})));
    rules.push_back(exact(P::Language, term(EDM, "dc:language")));
    rules.push_back(exact(P::Language, term(DS, "Language")));

    // Identifier
    rules.push_back(exact(P::Identifier, term(DC, "dc:identifier")));
    rules.push_back(exact(P::Identifier, xml_path(EAD, {"unitid"})));
    rules.push_back(exact(P::Identifier, xml_path(MODS, {"identifier"})));
    rules.push_back(exact(P::Identifier, term(EDM, "dc:identifier")));
    rules.push_back(exact(P::Identifier, term(DS, "Shelfmark")));

    // Physical extent
    rules.push_back(exact(P::PhysicalExtent, term(DC, "dc:format")));
    rules.push_back(exact(P::PhysicalExtent, xml_path(EAD, {"physdesc", "extent"})));
    rules.push_back(exact(P::PhysicalExtent, xml_path(MODS, {"physicalDescription"})));
    rules.push_back(exact(P::PhysicalExtent, term(EDM, "dcterms:extent")));
    rules.push_back(exact(P::PhysicalExtent, term(DS, "Physical Description")));

    // Material information: representable only in EAD.
    rules.push_back(unmappable(P::MaterialInformation, DC));
    rules.push_back(exact(P::MaterialInformation, xml_path(EAD, {"physdesc"})));
    rules.push_back(unmappable(P::MaterialInformation, MODS));
    rules.push_back(unmappable(P::MaterialInformation, EDM));
    rules.push_back(unmappable(P::MaterialInformation, DS));

    // Place of origin
    rules.push_back(unmappable(P::PlaceOfOrigin, DC));
    rules.push_back(exact(P::PlaceOfOrigin, xml_path(EAD, {"geogname"})));
    rules.push_back(exact(P::PlaceOfOrigin, xml_path(MODS, {"originInfo", "place"})));
    rules.push_back(approximate(
        P::PlaceOfOrigin, term(EDM, "edm:hasMet"),
        "origin weakened to an encounter: edm:hasMet says only that the object has been "
        "in this place, not that it was created there"));
    rules.push_back(exact(P::PlaceOfOrigin, term(DS, "Place")));

    // Creation date
    rules.push_back(exact(P::CreationDate, term(DC, "dcterms:created")));
    rules.push_back(exact(P::CreationDate, xml_path(EAD, {"unitdate"})));
    rules.push_back(exact(P::CreationDate, xml_path(MODS, {"originInfo", "dateCreated"})));
    rules.push_back(exact(P::CreationDate, term(EDM, "dcterms:created")));
    rules.push_back(exact(P::CreationDate, term(DS, "Date")));

    // Current location
    rules.push_back(unmappable(P::CurrentLocation, DC));
    rules.push_back(exact(P::CurrentLocation, xml_path(EAD, {"physloc"})));
    rules.push_back(exact(P::CurrentLocation, xml_path(MODS, {"originInfo", "place"})));
    rules.push_back(exact(P::CurrentLocation, term(EDM, "edm:currentLocation")));
    rules.push_back(exact(P::CurrentLocation, term(DS, "Holding Institution")));

    // Custody history
    rules.push_back(exact(P::CustodyHistory, term(DC, "dcterms:provenance")));
    rules.push_back(exact(P::CustodyHistory, xml_path(EAD, {"custodhist"})));
    rules.push_back(exact(P::CustodyHistory, xml_path(MODS, {"originInfo", "note"})));
    rules.push_back(exact(P::CustodyHistory, term(EDM, "dcterms:provenance")));
    rules.push_back(unmappable(P::CustodyHistory, DS));

    // Publisher. <bibref> is a citation container; reading it back as a
    // publisher is unreliable, so the EAD rule is forward-only.
    rules.push_back(exact(P::Publisher, term(DC, "dc:publisher")));
    rules.push_back(exact(P::Publisher, xml_path(EAD, {"bibref"}), /*forward_only=*/true));
    rules.push_back(exact(P::Publisher, xml_path(MODS, {"originInfo", "publisher"})));
    rules.push_back(exact(P::Publisher, term(EDM, "dc:publisher")));
    rules.push_back(unmappable(P::Publisher, DS));

    // Other editions
    rules.push_back(alternative_fixed(
        P::OtherEditions, {term(DC, "dcterms:hasVersion"), term(DC, "dcterms:isVersionOf")}, 0));
    {
        auto r = exact(P::OtherEditions, xml_path(EAD, {"bibliography"}), /*forward_only=*/true);
        rules.push_back(std::move(r));
    }
    rules.push_back(exact(P::OtherEditions, xml_path(MODS, {"originInfo", "edition"})));
    rules.push_back(alternative_fixed(
        P::OtherEditions, {term(EDM, "dcterms:hasVersion"), term(EDM, "dcterms:isVersionOf")}, 0));
    rules.push_back(unmappable(P::OtherEditions, DS));

    // Related date
    rules.push_back(exact(P::RelatedDate, term(DC, "dcterms:temporal")));
    rules.push_back(unmappable(P::RelatedDate, EAD));
    rules.push_back(exact(P::RelatedDate, xml_path(MODS, {"subject", "temporal"})));
    rules.push_back(approximate(
        P::RelatedDate, term(EDM, "edm:hasMet"),
        "related date rendered as a generic encounter; edm:hasMet does not say what "
        "happened on the date"));
    rules.push_back(unmappable(P::RelatedDate, DS));

    // Related place
    rules.push_back(exact(P::RelatedPlace, term(DC, "dcterms:spatial")));
    rules.push_back(exact(P::RelatedPlace, xml_path(EAD, {"geogname"})));
    rules.push_back(unmappable(P::RelatedPlace, MODS));
    {
        RoleResolver place_routes;
        place_routes.routes = {{"Event place", {term(EDM, "edm:happenedAt"), ""}}};
        place_routes.unqualified = {term(EDM, "dcterms:spatial"), ""};
        place_routes.fallback = RoleRoute{term(EDM, "dcterms:spatial"), ""};
        rules.push_back(alternative_role(
            P::RelatedPlace, {term(EDM, "dcterms:spatial"), term(EDM, "edm:happenedAt")},
            std::move(place_routes)));
    }
    rules.push_back(unmappable(P::RelatedPlace, DS));

    // Related person. The EDM routes carry the role semantics: a sender is
    // recorded as the creator and a receiver as a person the object met,
    // both of which are approximations of the archival roles.
    {
        RoleResolver person_dc;
        person_dc.routes = {
            {"Sender", {term(DC, "dc:creator"), ""}},
            {"Creator", {term(DC, "dc:creator"), ""}},
        };
        person_dc.unqualified = {term(DC, "dc:contributor"), ""};
        person_dc.fallback = RoleRoute{term(DC, "dc:contributor"), ""};
        rules.push_back(alternative_role(
            P::RelatedPerson, {term(DC, "dc:contributor"), term(DC, "dc:creator")},
            std::move(person_dc)));
    }
    rules.push_back(approximate(P::RelatedPerson, xml_path(EAD, {"persname"}),
                                "recorded as a plain person-name reference; the agent role "
                                "is not encoded"));
    rules.push_back(unmappable(P::RelatedPerson, MODS));
    {
        RoleResolver person_edm;
        person_edm.routes = {
            {"Sender",
             {term(EDM, "dc:creator"),
              "sender recorded as the creator of the object; creatorship of a letter is an "
              "approximation of sending it"}},
            {"Creator", {term(EDM, "dc:creator"), ""}},
            {"Receiver",
             {term(EDM, "edm:hasMet"),
              "receiver recorded as a person the object has met; the intent of delivery is "
              "not asserted"}},
            {"Artist", {term(EDM, "dc:contributor"), ""}},
            {"Deceased", {term(EDM, "edm:hasMet"), ""}},
            {"Mentioned", {term(EDM, "edm:hasMet"), ""}},
            {"Depicted", {term(EDM, "edm:isRepresentationOf"), ""}},
        };
        person_edm.unqualified = {term(EDM, "dc:contributor"), ""};
        rules.push_back(alternative_role(
            P::RelatedPerson,
            {term(EDM, "dc:contributor"), term(EDM, "dc:creator"), term(EDM, "edm:hasMet"),
             term(EDM, "edm:isRepresentationOf")},
            std::move(person_edm)));
    }
    rules.push_back(unmappable(P::RelatedPerson, DS));

    // External link
    rules.push_back(exact(P::ExternalLink, term(DC, "dc:relation")));
    rules.push_back(unmappable(P::ExternalLink, EAD));
    rules.push_back(exact(P::ExternalLink, xml_path(MODS, {"location", "url"})));
    rules.push_back(alternative_fixed(
        P::ExternalLink, {term(EDM, "dc:relation"), term(EDM, "edm:isRelatedTo")}, 0));
    rules.push_back(exact(P::ExternalLink, term(DS, "Institutional Record")));

    // Description / Notes
    rules.push_back(exact(P::DescriptionNotes, term(DC, "dc:description")));
    rules.push_back(exact(P::DescriptionNotes, xml_path(EAD, {"scopecontent"})));
    rules.push_back(alternative_fixed(P::DescriptionNotes,
                                      {xml_path(MODS, {"abstract"}), xml_path(MODS, {"note"}),
                                       xml_path(MODS, {"tabelofContents"})},
                                      0));
    rules.push_back(exact(P::DescriptionNotes, term(EDM, "dc:description")));
    rules.push_back(exact(P::DescriptionNotes, term(DS, "Note")));

    // Typography note: no representation anywhere.
    for (auto s : kStandards) rules.push_back(unmappable(P::TypographyNote, s));

    // Keywords
    rules.push_back(exact(P::Keywords, term(DC, "dc:subject")));
    rules.push_back(exact(P::Keywords, xml_path(EAD, {"controlaccess", "subject"})));
    rules.push_back(alternative_fixed(
        P::Keywords, {xml_path(MODS, {"subject"}), xml_path(MODS, {"classification"})}, 0));
    rules.push_back(exact(P::Keywords, term(EDM, "dc:subject")));
    rules.push_back(exact(P::Keywords, term(DS, "Keyword(s)")));

    return rules;
}

} // namespace

const CrosswalkTable& builtin_table() {
    static const CrosswalkTable table(build_rules());
    return table;
}

std::vector<PivotProperty> lossless_roundtrip_properties(const CrosswalkTable& table, Standard s) {
    auto takes_qualifier = [](PivotProperty p) {
        return p == PivotProperty::RelatedPerson || p == PivotProperty::RelatedDate ||
               p == PivotProperty::RelatedPlace;
    };
    std::vector<PivotProperty> out;
    for (auto p : all_properties()) {
        const auto& r = table.rule(p, s);
        if (r.kind != MappingKindTag::Exact || r.forward_only || takes_qualifier(p)) continue;
        const auto& target = r.paths.front();
        bool shared = false;
        for (auto q : all_properties()) {
            if (q == p) continue;
            for (const auto& other : table.rule(q, s).paths)
                if (other == target) shared = true;
        }
        if (!shared) out.push_back(p);
    }
    return out;
}

} // namespace crosswalk
