#pragma once

// Grid CSV: first line ",A,B,...", then "<row>,<v>,<v>,..." per grid row.
// LF line endings, no trailing commas. Field CSVs use the same layout with
// "EY|NO3|OM|credits" cells.

#include "agrisim/field_model.hpp"
#include "agrisim/grid.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace agrisim {

// nullopt decimals = shortest text that reads back to the same double.
std::string format_number(double value, std::optional<int> decimals = std::nullopt);

ValueGrid read_grid_csv(std::string_view text);
std::string write_grid_csv(const ValueGrid& grid, std::optional<int> decimals = std::nullopt);

FieldGrid read_field_csv(std::string_view text);
std::string write_field_csv(const FieldGrid& field);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest_hex(std::string_view bytes);

} // namespace agrisim
