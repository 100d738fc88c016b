#include "agrisim/zone_id.hpp"

#include "agrisim/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace agrisim {

std::string column_label(std::size_t column) {
    std::string label;
    std::size_t n = column + 1;
    while (n > 0) {
        --n;
        label.insert(label.begin(), static_cast<char>('A' + n % 26));
        n /= 26;
    }
    return label;
}

std::string ZoneId::to_string() const { return column_label(column) + std::to_string(row); }

ZoneId ZoneId::parse(std::string_view text) {
    std::size_t pos = 0;
    std::size_t letters = 0;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        letters = letters * 26 + static_cast<std::size_t>(c - 'A' + 1);
        ++pos;
    }
    if (pos == 0 || pos == text.size()) {
        throw_data_error("malformed zone id '" + std::string(text) + "'");
    }
    std::size_t row = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), row);
    if (ec != std::errc{} || end != text.data() + text.size() || row == 0) {
        throw_data_error("malformed zone id '" + std::string(text) + "'");
    }
    return ZoneId{letters - 1, row};
}

ZoneRange ZoneRange::parse(std::string_view text) {
    auto colon = text.find(':');
    ZoneId a;
    ZoneId b;
    try {
        if (colon == std::string_view::npos) {
            a = b = ZoneId::parse(text);
        } else {
            a = ZoneId::parse(text.substr(0, colon));
            b = ZoneId::parse(text.substr(colon + 1));
        }
    } catch (const Error&) {
        throw_data_error("malformed zone range '" + std::string(text) + "'");
    }
    return ZoneRange{ZoneId{std::min(a.column, b.column), std::min(a.row, b.row)},
                     ZoneId{std::max(a.column, b.column), std::max(a.row, b.row)}};
}

bool ZoneRange::contains(const ZoneId& id) const {
    return id.column >= first.column && id.column <= last.column && id.row >= first.row &&
           id.row <= last.row;
}

} // namespace agrisim
