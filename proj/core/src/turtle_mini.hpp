#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crosswalk::detail {

struct TurtleTerm {
    enum class Kind { Iri, Prefixed, Literal, TypeKeyword };
    Kind kind = Kind::Iri;
    std::string text; // IRI without angles, "pfx:local" as written, or literal value
};

struct TurtleTriple {
    TurtleTerm subject;
    TurtleTerm predicate;
    TurtleTerm object;
};

struct TurtleDocument {
    std::vector<std::pair<std::string, std::string>> prefixes; // prefix -> namespace IRI
    std::vector<TurtleTriple> triples;

    const std::string* prefix_namespace(std::string_view prefix) const;

    /// Expands "pfx:local" / the type keyword to a full IRI; literals and
    /// full IRIs pass through. Empty result when the prefix is unbound.
    std::string expand(const TurtleTerm& term) const;
};

/// Parses the Turtle subset the codecs speak: @prefix directives, triples
/// with ';' and ',' continuation, IRIs, prefixed names, the 'a' keyword,
/// quoted literals with escapes, and '#' comments. Throws
/// MalformedDocumentError on anything else.
TurtleDocument parse_turtle(std::string_view bytes);

std::string turtle_escape_literal(std::string_view text);

} // namespace crosswalk::detail
