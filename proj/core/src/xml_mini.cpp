#include "xml_mini.hpp"

#include <algorithm>
#include <cctype>

#include "crosswalk/errors.hpp"

namespace crosswalk::detail {

namespace {

class Reader {
public:
    explicit Reader(std::string_view input) : input_(input) {}

    XmlElement parse_document() {
        skip_misc();
        XmlElement root = parse_element();
        skip_misc();
        if (pos_ != input_.size()) fail("trailing content after root element");
        return root;
    }

private:
    std::string_view input_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw MalformedDocumentError("XML parse error at byte " + std::to_string(pos_) + ": " +
                                     what);
    }

    bool eof() const { return pos_ >= input_.size(); }
    char peek() const { return input_[pos_]; }
    bool starts_with(std::string_view s) const { return input_.substr(pos_, s.size()) == s; }

    void skip_whitespace() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
    }

    // Whitespace, comments, processing instructions and a DOCTYPE line.
    void skip_misc() {
        while (true) {
            skip_whitespace();
            if (starts_with("<!--")) {
                auto end = input_.find("-->", pos_ + 4);
                if (end == std::string_view::npos) fail("unterminated comment");
                pos_ = end + 3;
            } else if (starts_with("<?")) {
                auto end = input_.find("?>", pos_ + 2);
                if (end == std::string_view::npos) fail("unterminated processing instruction");
                pos_ = end + 2;
            } else if (starts_with("<!DOCTYPE")) {
                auto end = input_.find('>', pos_);
                if (end == std::string_view::npos) fail("unterminated DOCTYPE");
                pos_ = end + 1;
            } else {
                return;
            }
        }
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == ':' || c == '_' ||
               c == '-' || c == '.';
    }

    std::string parse_name() {
        std::size_t start = pos_;
        while (!eof() && name_char(peek())) ++pos_;
        if (pos_ == start) fail("expected a name");
        return std::string(input_.substr(start, pos_ - start));
    }

    std::string decode_entities(std::string_view raw) {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            auto end = raw.find(';', i);
            if (end == std::string_view::npos) fail("unterminated entity reference");
            auto entity = raw.substr(i + 1, end - i - 1);
            if (entity == "amp") out += '&';
            else if (entity == "lt") out += '<';
            else if (entity == "gt") out += '>';
            else if (entity == "quot") out += '"';
            else if (entity == "apos") out += '\'';
            else if (!entity.empty() && entity[0] == '#') {
                long code = 0;
                try {
                    code = entity[1] == 'x' || entity[1] == 'X'
                               ? std::stol(std::string(entity.substr(2)), nullptr, 16)
                               : std::stol(std::string(entity.substr(1)));
                } catch (...) {
                    fail("bad character reference");
                }
                append_utf8(out, code);
            } else {
                fail("unknown entity '&" + std::string(entity) + ";'");
            }
            i = end;
        }
        return out;
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

    XmlElement parse_element() {
        if (eof() || peek() != '<') fail("expected an element");
        ++pos_;
        XmlElement element;
        element.name = parse_name();
        while (true) {
            skip_whitespace();
            if (eof()) fail("unterminated start tag");
            if (peek() == '>') {
                ++pos_;
                break;
            }
            if (starts_with("/>")) {
                pos_ += 2;
                return element;
            }
            auto attr_name = parse_name();
            skip_whitespace();
            if (eof() || peek() != '=') fail("expected '=' in attribute");
            ++pos_;
            skip_whitespace();
            if (eof() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
            char quote = peek();
            ++pos_;
            auto end = input_.find(quote, pos_);
            if (end == std::string_view::npos) fail("unterminated attribute value");
            element.attributes.emplace_back(attr_name,
                                            decode_entities(input_.substr(pos_, end - pos_)));
            pos_ = end + 1;
        }

        std::vector<std::string> texts;
        while (true) {
            if (eof()) fail("unterminated element <" + element.name + ">");
            if (starts_with("</")) {
                pos_ += 2;
                auto close = parse_name();
                if (close != element.name)
                    fail("mismatched end tag </" + close + "> for <" + element.name + ">");
                skip_whitespace();
                if (eof() || peek() != '>') fail("malformed end tag");
                ++pos_;
                break;
            }
            if (starts_with("<!--")) {
                auto end = input_.find("-->", pos_ + 4);
                if (end == std::string_view::npos) fail("unterminated comment");
                pos_ = end + 3;
            } else if (starts_with("<![CDATA[")) {
                auto end = input_.find("]]>", pos_ + 9);
                if (end == std::string_view::npos) fail("unterminated CDATA section");
                texts.emplace_back(input_.substr(pos_ + 9, end - pos_ - 9));
                pos_ = end + 3;
            } else if (peek() == '<') {
                element.children.push_back(parse_element());
            } else {
                auto end = input_.find('<', pos_);
                if (end == std::string_view::npos) fail("unterminated element content");
                texts.push_back(decode_entities(input_.substr(pos_, end - pos_)));
                pos_ = end;
            }
        }

        if (element.children.empty()) {
            for (const auto& t : texts) element.text += t;
        } else {
            for (auto& t : texts) {
                bool blank = std::all_of(t.begin(), t.end(), [](unsigned char c) {
                    return std::isspace(c) != 0;
                });
                if (!blank) element.mixed_text.push_back(std::move(t));
            }
        }
        return element;
    }
};

} // namespace

std::string_view XmlElement::local_name() const {
    auto colon = name.rfind(':');
    return colon == std::string::npos ? std::string_view(name)
                                      : std::string_view(name).substr(colon + 1);
}

const std::string* XmlElement::attribute(std::string_view attr) const {
    for (const auto& [n, v] : attributes)
        if (n == attr) return &v;
    return nullptr;
}

XmlElement parse_xml(std::string_view bytes) { return Reader(bytes).parse_document(); }

std::string xml_escape_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string xml_escape_attribute(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\n': out += "&#10;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace crosswalk::detail
