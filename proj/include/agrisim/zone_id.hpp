#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace agrisim {

// Column letters are bijective base-26 ("A".."Z", "AA", ...); rows are 1-based.
struct ZoneId {
    std::size_t column = 0;
    std::size_t row = 1;

    std::string to_string() const;
    static ZoneId parse(std::string_view text);

    auto operator<=>(const ZoneId&) const = default;
};

std::string column_label(std::size_t column);

// Inclusive rectangle such as "A1:D10". Corners may be given in any order.
struct ZoneRange {
    ZoneId first;
    ZoneId last;

    static ZoneRange parse(std::string_view text);
    bool contains(const ZoneId& id) const;
};

} // namespace agrisim
