#include "agrisim/field_model.hpp"

#include "agrisim/error.hpp"

#include <cmath>
#include <random>
#include <set>

namespace agrisim {

namespace {

double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double draw(std::mt19937_64& rng, const ValueRange& range) {
    return range.lo + (range.hi - range.lo) * unit_draw(rng);
}

void check_range(const ValueRange& r, const char* name) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
        throw_data_error(std::string("invalid ") + name + " range [" + std::to_string(r.lo) +
                         ", " + std::to_string(r.hi) + "]");
    }
}

std::string fmt(double v) {
    std::string s = std::to_string(v);
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

} // namespace

void GenerationRanges::validate() const {
    check_range(yield_goal, "yield goal");
    check_range(nitrate, "nitrate");
    check_range(organic_matter, "organic matter");
    if (!(n_credits >= 0.0)) throw_data_error("n_credits must be >= 0");
    // Every draw must be a valid zone.
    if (!(yield_goal.lo > 0.0)) throw_data_error("yield goal range must be > 0");
    if (!(nitrate.lo >= 0.0)) throw_data_error("nitrate range must be >= 0");
    if (organic_matter.lo < kMinOrganicMatter || organic_matter.hi > kMaxOrganicMatter) {
        throw_data_error("organic matter range must lie within " + fmt(kMinOrganicMatter) + "-" +
                         fmt(kMaxOrganicMatter) + " percent");
    }
}

FieldGrid::FieldGrid(std::size_t rows, std::size_t cols, std::vector<Zone> zones)
    : rows_(rows), cols_(cols), zones_(std::move(zones)) {}

const Zone& FieldGrid::zone(const ZoneId& id) const {
    if (id.column >= cols_ || id.row < 1 || id.row > rows_) {
        throw_data_error("zone " + id.to_string() + " is outside the field");
    }
    return zones_.at((id.row - 1) * cols_ + id.column);
}

FieldGrid generate_field(std::uint64_t seed, std::size_t rows, std::size_t cols,
                         const GenerationRanges& ranges) {
    if (rows == 0 || cols == 0) throw_data_error("field grid must have at least one row and column");
    ranges.validate();

    std::mt19937_64 rng(seed);
    std::vector<Zone> zones;
    zones.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            Zone z;
            z.id = ZoneId{c, r + 1};
            z.yield_goal = draw(rng, ranges.yield_goal);
            z.soil_nitrate = draw(rng, ranges.nitrate);
            z.organic_matter = draw(rng, ranges.organic_matter);
            z.n_credits = ranges.n_credits;
            zones.push_back(z);
        }
    }
    return FieldGrid(rows, cols, std::move(zones));
}

std::vector<Violation> validate_field(const FieldGrid& field) {
    std::vector<Violation> out;
    if (field.rows() == 0 || field.cols() == 0) {
        out.push_back({"field", "grid must have at least one row and column"});
    }
    if (field.size() != field.rows() * field.cols()) {
        out.push_back({"field", "expected " + std::to_string(field.rows() * field.cols()) +
                                    " zones, found " + std::to_string(field.size())});
    }

    std::set<ZoneId> seen;
    for (std::size_t i = 0; i < field.size(); ++i) {
        const Zone& z = field.zone(i);
        const std::string label = z.id.to_string();

        if (z.id.column >= field.cols() || z.id.row < 1 || z.id.row > field.rows()) {
            out.push_back({label, "zone id outside the " + std::to_string(field.rows()) + "x" +
                                      std::to_string(field.cols()) + " grid"});
        } else if (field.cols() > 0 && (z.id.row - 1) * field.cols() + z.id.column != i) {
            out.push_back({label, "zone is not at its row-major position " + std::to_string(i)});
        }
        if (!seen.insert(z.id).second) {
            out.push_back({label, "duplicate zone id"});
        }

        if (!(z.yield_goal > 0.0) || !std::isfinite(z.yield_goal)) {
            out.push_back({label, "yield goal must be > 0 (got " + fmt(z.yield_goal) + ")"});
        }
        if (!(z.soil_nitrate >= 0.0) || !std::isfinite(z.soil_nitrate)) {
            out.push_back({label, "soil nitrate must be >= 0 (got " + fmt(z.soil_nitrate) + ")"});
        }
        if (!(z.organic_matter >= kMinOrganicMatter && z.organic_matter <= kMaxOrganicMatter)) {
            out.push_back({label, "organic matter must be within 0.5-3.0 percent (got " +
                                      fmt(z.organic_matter) + ")"});
        }
        if (!(z.n_credits >= 0.0) || !std::isfinite(z.n_credits)) {
            out.push_back({label, "N credits must be >= 0 (got " + fmt(z.n_credits) + ")"});
        }
    }
    return out;
}

void require_valid_field(const FieldGrid& field) {
    auto violations = validate_field(field);
    if (!violations.empty()) {
        std::string msg = "invalid field: " + violations.front().zone + ": " +
                          violations.front().constraint;
        if (violations.size() > 1) {
            msg += " (and " + std::to_string(violations.size() - 1) + " more)";
        }
        throw_data_error(msg);
    }
}

} // namespace agrisim
