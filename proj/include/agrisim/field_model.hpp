#pragma once

#include "agrisim/grid.hpp"
#include "agrisim/zone_id.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace agrisim {

inline constexpr double kMinOrganicMatter = 0.5;
inline constexpr double kMaxOrganicMatter = 3.0;

// One management acre.
struct Zone {
    ZoneId id;
    double yield_goal = 0.0;      // bu/acre
    double soil_nitrate = 0.0;    // NO3-N ppm, root zone average
    double organic_matter = 0.0;  // percent
    double n_credits = 0.0;       // lb/acre from legumes, manure, irrigation water

    bool operator==(const Zone&) const = default;
};

struct ValueRange {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const { return v >= lo && v <= hi; }
    bool operator==(const ValueRange&) const = default;
};

struct GenerationRanges {
    ValueRange yield_goal{150.0, 190.0};
    ValueRange nitrate{2.0, 4.0};
    ValueRange organic_matter{1.8, 2.2};
    double n_credits = 0.0;

    void validate() const;
    bool operator==(const GenerationRanges&) const = default;
};

// Zones are stored row-major. The grid does not enforce its invariants on
// construction so that malformed inputs can be reported by validate_field().
class FieldGrid {
public:
    FieldGrid() = default;
    FieldGrid(std::size_t rows, std::size_t cols, std::vector<Zone> zones);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return zones_.size(); }

    std::span<const Zone> zones() const noexcept { return zones_; }
    const Zone& zone(std::size_t index) const { return zones_.at(index); }
    const Zone& zone(const ZoneId& id) const;

    // Shape-only grid, handy for building congruent per-zone value grids.
    template <typename T>
    Grid<T> make_grid(const T& fill = T{}) const {
        return Grid<T>(rows_, cols_, fill);
    }

    bool operator==(const FieldGrid&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Zone> zones_;
};

// Fills zones row-major from std::mt19937_64 seeded with `seed`. Each zone
// draws yield goal, nitrate, organic matter in that order; a draw is
// lo + (hi - lo) * u where u = (next() >> 11) * 2^-53. mt19937_64's output
// sequence is fixed by the C++ standard, so a seed maps to the same field on
// every conforming platform.
FieldGrid generate_field(std::uint64_t seed, std::size_t rows, std::size_t cols,
                         const GenerationRanges& ranges = {});

struct Violation {
    std::string zone;  // zone label, or "field" for structural problems
    std::string constraint;

    bool operator==(const Violation&) const = default;
};

std::vector<Violation> validate_field(const FieldGrid& field);

// Throws a data error naming the first violation.
void require_valid_field(const FieldGrid& field);

} // namespace agrisim
