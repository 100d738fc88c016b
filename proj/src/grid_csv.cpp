#include "agrisim/grid_csv.hpp"

#include "agrisim/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

namespace agrisim {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                        : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> lines;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

double parse_number(std::string_view cell, std::size_t line_no) {
    double v = 0.0;
    auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size() || !std::isfinite(v)) {
        throw_data_error("line " + std::to_string(line_no) + ": non-numeric cell '" +
                         std::string(cell) + "'");
    }
    return v;
}

// Parses header + labeled rows and hands each cell to `on_cell`.
template <typename OnCell>
std::pair<std::size_t, std::size_t> scan_grid(std::string_view text, OnCell&& on_cell) {
    const auto lines = lines_of(text);
    if (lines.empty()) throw_data_error("grid CSV is empty (missing header)");

    const auto header = split(lines[0], ',');
    if (header.size() < 2 || !header[0].empty()) {
        throw_data_error("grid CSV header must start with ',' followed by column letters");
    }
    const std::size_t cols = header.size() - 1;
    for (std::size_t c = 0; c < cols; ++c) {
        if (header[c + 1] != column_label(c)) {
            throw_data_error("grid CSV header column " + std::to_string(c + 1) + " is '" +
                             std::string(header[c + 1]) + "', expected '" + column_label(c) + "'");
        }
    }
    const std::size_t rows = lines.size() - 1;
    if (rows == 0) throw_data_error("grid CSV has a header but no rows");

    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t line_no = r + 2;
        const auto cells = split(lines[r + 1], ',');
        if (cells.size() != cols + 1) {
            throw_data_error("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                             " cells, found " + std::to_string(cells.size() - 1) + " (ragged row)");
        }
        if (cells[0] != std::to_string(r + 1)) {
            throw_data_error("line " + std::to_string(line_no) + ": row label '" +
                             std::string(cells[0]) + "', expected " + std::to_string(r + 1));
        }
        for (std::size_t c = 0; c < cols; ++c) on_cell(r, c, cells[c + 1], line_no);
    }
    return {rows, cols};
}

std::string header_line(std::size_t cols) {
    std::string s;
    for (std::size_t c = 0; c < cols; ++c) s += "," + column_label(c);
    return s + "\n";
}

} // namespace

std::string format_number(double value, std::optional<int> decimals) {
    if (value == 0.0) value = 0.0;  // drop negative zero
    std::array<char, 64> buf{};
    std::to_chars_result res;
    if (decimals) {
        const double scale = std::pow(10.0, *decimals);
        double rounded = std::round(value * scale) / scale;
        if (rounded == 0.0) rounded = 0.0;
        res = std::to_chars(buf.data(), buf.data() + buf.size(), rounded, std::chars_format::fixed,
                            *decimals);
    } else {
        res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    }
    return std::string(buf.data(), res.ptr);
}

ValueGrid read_grid_csv(std::string_view text) {
    std::vector<double> cells;
    auto [rows, cols] = scan_grid(text, [&](std::size_t, std::size_t, std::string_view cell,
                                            std::size_t line_no) {
        cells.push_back(parse_number(cell, line_no));
    });
    return ValueGrid(rows, cols, std::move(cells));
}

std::string write_grid_csv(const ValueGrid& grid, std::optional<int> decimals) {
    std::string out = header_line(grid.cols());
    for (std::size_t r = 0; r < grid.rows(); ++r) {
        out += std::to_string(r + 1);
        for (std::size_t c = 0; c < grid.cols(); ++c) out += "," + format_number(grid(r, c), decimals);
        out += "\n";
    }
    return out;
}

FieldGrid read_field_csv(std::string_view text) {
    std::vector<Zone> zones;
    auto [rows, cols] = scan_grid(text, [&](std::size_t r, std::size_t c, std::string_view cell,
                                            std::size_t line_no) {
        const auto parts = split(cell, '|');
        if (parts.size() != 4) {
            throw_data_error("line " + std::to_string(line_no) + ": field cell '" + std::string(cell) +
                             "' must be EY|NO3|OM|credits");
        }
        Zone z;
        z.id = ZoneId{c, r + 1};
        z.yield_goal = parse_number(parts[0], line_no);
        z.soil_nitrate = parse_number(parts[1], line_no);
        z.organic_matter = parse_number(parts[2], line_no);
        z.n_credits = parse_number(parts[3], line_no);
        zones.push_back(z);
    });
    return FieldGrid(rows, cols, std::move(zones));
}

std::string write_field_csv(const FieldGrid& field) {
    std::string out = header_line(field.cols());
    for (std::size_t r = 0; r < field.rows(); ++r) {
        out += std::to_string(r + 1);
        for (std::size_t c = 0; c < field.cols(); ++c) {
            const Zone& z = field.zone(r * field.cols() + c);
            out += "," + format_number(z.yield_goal) + "|" + format_number(z.soil_nitrate) + "|" +
                   format_number(z.organic_matter) + "|" + format_number(z.n_credits);
        }
        out += "\n";
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data_error("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw_data_error("cannot open '" + path.string() + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw_data_error("failed writing '" + path.string() + "'");
}

std::string digest_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = kHex[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace agrisim
