#pragma once

#include <array>
#include <string>

#include "crosswalk/table.hpp"

namespace crosswalk {

/// 21x5 grid of rendered rule cells, one row per pivot property in enum
/// order, one column per standard in table order.
struct CoverageMatrix {
    struct Row {
        PivotProperty property = PivotProperty::Title;
        std::array<std::string, kStandardCount> cells;
        std::array<MappingKindTag, kStandardCount> kinds;
    };

    std::array<Row, kPivotPropertyCount> rows;

    const std::string& cell(PivotProperty p, Standard s) const;

    /// Header "property,dublin_core,ead,mods,edm,digital_scriptorium",
    /// 21 data rows, minimal RFC 4180 quoting, trailing newline.
    std::string to_csv() const;

    /// Pipe table with display names; mapped cells are code spans.
    std::string to_markdown() const;
};

CoverageMatrix coverage_matrix(const CrosswalkTable& table);

} // namespace crosswalk
