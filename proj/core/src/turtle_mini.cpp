#include "turtle_mini.hpp"

#include <cctype>

#include "crosswalk/errors.hpp"

namespace crosswalk::detail {

namespace {

class Reader {
public:
    explicit Reader(std::string_view input) : input_(input) {}

    TurtleDocument parse() {
        TurtleDocument doc;
        while (true) {
            skip_trivia();
            if (eof()) break;
            if (starts_with("@prefix")) {
                parse_prefix(doc);
            } else {
                parse_statement(doc);
            }
        }
        return doc;
    }

private:
    std::string_view input_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw MalformedDocumentError("Turtle parse error at byte " + std::to_string(pos_) + ": " +
                                     what);
    }

    bool eof() const { return pos_ >= input_.size(); }
    char peek() const { return input_[pos_]; }
    bool starts_with(std::string_view s) const { return input_.substr(pos_, s.size()) == s; }

    void skip_trivia() {
        while (!eof()) {
            if (std::isspace(static_cast<unsigned char>(peek())) != 0) {
                ++pos_;
            } else if (peek() == '#') {
                auto end = input_.find('\n', pos_);
                pos_ = end == std::string_view::npos ? input_.size() : end + 1;
            } else {
                return;
            }
        }
    }

    void expect(char c, const char* context) {
        skip_trivia();
        if (eof() || peek() != c) fail(std::string("expected '") + c + "' " + context);
        ++pos_;
    }

    void parse_prefix(TurtleDocument& doc) {
        pos_ += 7; // @prefix
        skip_trivia();
        std::size_t start = pos_;
        while (!eof() && peek() != ':') ++pos_;
        if (eof()) fail("unterminated @prefix name");
        std::string prefix(input_.substr(start, pos_ - start));
        ++pos_; // ':'
        skip_trivia();
        auto iri = parse_iri();
        doc.prefixes.emplace_back(std::move(prefix), std::move(iri.text));
        expect('.', "after @prefix directive");
    }

    std::string parse_escaped_until(char terminator, bool unicode_escapes) {
        std::string out;
        while (true) {
            if (eof()) fail("unterminated quoted sequence");
            char c = peek();
            if (c == terminator) {
                ++pos_;
                return out;
            }
            if (c == '\\') {
                ++pos_;
                if (eof()) fail("dangling escape");
                char e = peek();
                ++pos_;
                switch (e) {
                case 't': out += '\t'; break;
                case 'n': out += '\n'; break;
                case 'r': out += '\r'; break;
                case '"': out += '"'; break;
                case '\\': out += '\\'; break;
                case 'u':
                case 'U': {
                    if (!unicode_escapes) fail("unexpected unicode escape");
                    std::size_t digits = e == 'u' ? 4 : 8;
                    if (pos_ + digits > input_.size()) fail("truncated unicode escape");
                    long code = 0;
                    for (std::size_t i = 0; i < digits; ++i) {
                        char h = input_[pos_ + i];
                        int v = h >= '0' && h <= '9'   ? h - '0'
                                : h >= 'a' && h <= 'f' ? h - 'a' + 10
                                : h >= 'A' && h <= 'F' ? h - 'A' + 10
                                                       : -1;
                        if (v < 0) fail("bad unicode escape");
                        code = code * 16 + v;
                    }
                    pos_ += digits;
                    append_utf8(out, code);
                    break;
                }
                default: fail(std::string("unknown escape '\\") + e + "'");
                }
            } else {
                out += c;
                ++pos_;
            }
        }
    }

    static void append_utf8(std::string& out, long code) {
        if (code < 0 || code > 0x10FFFF) code = 0xFFFD;
        if (code < 0x80) {
            out += static_cast<char>(code);
        } else if (code < 0x800) {
            out += static_cast<char>(0xC0 | (code >> 6));
            out += static_cast<char>(0x80 | (code & 0x3F));
        } else if (code < 0x10000) {
            out += static_cast<char>(0xE0 | (code >> 12));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (code & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (code >> 18));
            out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (code & 0x3F));
        }
    }

    TurtleTerm parse_iri() {
        if (eof() || peek() != '<') fail("expected an IRI");
        ++pos_;
        std::size_t start = pos_;
        while (!eof() && peek() != '>') ++pos_;
        if (eof()) fail("unterminated IRI");
        TurtleTerm term{TurtleTerm::Kind::Iri, std::string(input_.substr(start, pos_ - start))};
        ++pos_;
        return term;
    }

    TurtleTerm parse_literal() {
        ++pos_; // opening quote
        TurtleTerm term{TurtleTerm::Kind::Literal, parse_escaped_until('"', true)};
        // Ignore any language tag or datatype suffix; the value carries over.
        if (!eof() && peek() == '@') {
            ++pos_;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '-'))
                ++pos_;
        } else if (starts_with("^^")) {
            pos_ += 2;
            skip_trivia();
            if (!eof() && peek() == '<') {
                parse_iri();
            } else {
                parse_prefixed();
            }
        }
        return term;
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == ':' || c == '_' ||
               c == '-' || c == '%';
    }

    TurtleTerm parse_prefixed() {
        std::size_t start = pos_;
        while (!eof() && name_char(peek())) ++pos_;
        if (pos_ == start) fail("expected a term");
        std::string token(input_.substr(start, pos_ - start));
        if (token == "a") return {TurtleTerm::Kind::TypeKeyword, "a"};
        if (token.find(':') == std::string::npos)
            fail("bare word '" + token + "' is not a valid term");
        return {TurtleTerm::Kind::Prefixed, std::move(token)};
    }

    TurtleTerm parse_term() {
        skip_trivia();
        if (eof()) fail("expected a term");
        if (peek() == '<') return parse_iri();
        if (peek() == '"') return parse_literal();
        return parse_prefixed();
    }

    void parse_statement(TurtleDocument& doc) {
        TurtleTerm subject = parse_term();
        if (subject.kind == TurtleTerm::Kind::Literal) fail("literal cannot be a subject");
        while (true) {
            TurtleTerm predicate = parse_term();
            if (predicate.kind == TurtleTerm::Kind::Literal) fail("literal cannot be a predicate");
            while (true) {
                TurtleTerm object = parse_term();
                doc.triples.push_back({subject, predicate, object});
                skip_trivia();
                if (!eof() && peek() == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
            skip_trivia();
            if (!eof() && peek() == ';') {
                ++pos_;
                skip_trivia();
                // A ';' directly before '.' is legal trailing punctuation.
                if (!eof() && peek() == '.') break;
                continue;
            }
            break;
        }
        expect('.', "at end of statement");
    }
};

} // namespace

const std::string* TurtleDocument::prefix_namespace(std::string_view prefix) const {
    for (const auto& [p, ns] : prefixes)
        if (p == prefix) return &ns;
    return nullptr;
}

std::string TurtleDocument::expand(const TurtleTerm& term) const {
    switch (term.kind) {
    case TurtleTerm::Kind::Iri:
    case TurtleTerm::Kind::Literal:
        return term.text;
    case TurtleTerm::Kind::TypeKeyword:
        return "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    case TurtleTerm::Kind::Prefixed: {
        auto colon = term.text.find(':');
        const std::string* ns = prefix_namespace(std::string_view(term.text).substr(0, colon));
        if (!ns) return {};
        return *ns + term.text.substr(colon + 1);
    }
    }
    return {};
}

TurtleDocument parse_turtle(std::string_view bytes) { return Reader(bytes).parse(); }

std::string turtle_escape_literal(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace crosswalk::detail
