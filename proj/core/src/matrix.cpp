#include "crosswalk/matrix.hpp"

#include <sstream>

namespace crosswalk {

namespace {

// Minimal RFC 4180 quoting: quote only when the cell needs it.
std::string csv_cell(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

const std::string& CoverageMatrix::cell(PivotProperty p, Standard s) const {
    return rows[static_cast<std::size_t>(p)].cells[static_cast<std::size_t>(s)];
}

std::string CoverageMatrix::to_csv() const {
    std::string out = "property";
    for (auto s : all_standards()) {
        out += ',';
        out += standard_token(s);
    }
    out += '\n';
    for (const auto& row : rows) {
        out += csv_cell(std::string(property_name(row.property)));
        for (const auto& cell : row.cells) {
            out += ',';
            out += csv_cell(cell);
        }
        out += '\n';
    }
    return out;
}

std::string CoverageMatrix::to_markdown() const {
    std::string out = "| Property |";
    for (auto s : all_standards()) {
        out += ' ';
        out += standard_display_name(s);
        out += " |";
    }
    out += "\n| --- |";
    for (std::size_t i = 0; i < kStandardCount; ++i) out += " --- |";
    out += '\n';
    for (const auto& row : rows) {
        out += "| ";
        out += property_display_name(row.property);
        out += " |";
        for (const auto& cell : row.cells) {
            out += ' ';
            if (cell == "--") {
                out += "--";
            } else {
                out += '`';
                out += cell;
                out += '`';
            }
            out += " |";
        }
        out += '\n';
    }
    return out;
}

CoverageMatrix coverage_matrix(const CrosswalkTable& table) {
    CoverageMatrix matrix;
    for (auto p : all_properties()) {
        auto& row = matrix.rows[static_cast<std::size_t>(p)];
        row.property = p;
        for (auto s : all_standards()) {
            const auto& rule = table.rule(p, s);
            row.cells[static_cast<std::size_t>(s)] = rule.render_cell();
            row.kinds[static_cast<std::size_t>(s)] = rule.kind;
        }
    }
    return matrix;
}

} // namespace crosswalk
