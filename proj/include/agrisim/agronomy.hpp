#pragma once

// Nebraska nitrogen recommendation for corn and its inversion into a yield
// response.
//
// The recommendation curve doubles as the crop's response curve: the yield
// produced by N lb/acre is the yield goal whose recommendation is N, clamped
// to [floor, yield_goal + boost]. "Expected" and "actual" yields are the same
// function evaluated at the prescribed and the applied rate respectively.

#include "agrisim/field_model.hpp"
#include "agrisim/grid.hpp"

namespace agrisim {

struct EconParams {
    double corn_price = 7.53;      // $/bu
    double nitrogen_price = 1.10;  // $/lb
    double timing_adj = 0.95;      // split at-planting/in-season application

    void validate() const;
    bool operator==(const EconParams&) const = default;
};

struct YieldBounds {
    double floor = 100.0;  // bu/acre with no fertilizer
    double boost = 30.0;   // bu/acre attainable above the zone's yield goal

    void validate() const;
    double cap(const Zone& z) const { return z.yield_goal + boost; }
    bool operator==(const YieldBounds&) const = default;
};

struct SplitFractions {
    double at_planting = 0.25;
    double in_season = 0.75;

    void validate() const;
    bool operator==(const SplitFractions&) const = default;
};

// Price_adj and Timing_adj together; the product scales every rate.
struct ResponseCoefficients {
    double price_adj = 1.0;
    double timing_adj = 1.0;

    double product() const { return price_adj * timing_adj; }
};

// 0.263 + 0.1256 r - 0.00421 r^2 with r = corn_price / nitrogen_price.
double price_adjustment(double corn_price, double nitrogen_price);

ResponseCoefficients response_coefficients(const EconParams& econ);

// max(0, [35 + 1.2 EY - 8 NO3 - 0.14 EY OM - credits] * price_adj * timing_adj)
double recommend_nitrogen(const Zone& zone, double price_adj, double timing_adj);

struct SplitShares {
    double planting = 0.0;
    double inseason = 0.0;
};

// The larger share is the fraction product and the smaller one the exact
// remainder, so planting + inseason == n_rec holds bit-for-bit.
SplitShares split_prescription(double n_rec, const SplitFractions& fractions);

// Inverse of recommend_nitrogen, clamped to [floor, yield_goal + boost].
double yield_from_rate(double n_rate, const Zone& zone, const YieldBounds& bounds,
                       double price_adj, double timing_adj);

struct PrescriptionEntry {
    double n_rec = 0.0;
    double planting = 0.0;
    double inseason = 0.0;

    bool operator==(const PrescriptionEntry&) const = default;
};

class Prescription {
public:
    Prescription() = default;
    Prescription(Grid<PrescriptionEntry> entries, ResponseCoefficients coefficients);

    const Grid<PrescriptionEntry>& entries() const noexcept { return entries_; }
    const PrescriptionEntry& at(const ZoneId& id) const { return entries_.at(id); }
    std::size_t rows() const noexcept { return entries_.rows(); }
    std::size_t cols() const noexcept { return entries_.cols(); }
    const ResponseCoefficients& coefficients() const noexcept { return coefficients_; }

    // Row-major sums.
    double planting_total() const noexcept { return planting_total_; }
    double inseason_total() const noexcept { return inseason_total_; }
    double total() const noexcept { return total_; }

    ValueGrid n_rec_grid() const;
    ValueGrid planting_grid() const;
    ValueGrid inseason_grid() const;

private:
    Grid<PrescriptionEntry> entries_;
    ResponseCoefficients coefficients_;
    double planting_total_ = 0.0;
    double inseason_total_ = 0.0;
    double total_ = 0.0;
};

Prescription prescribe_field(const FieldGrid& field, const EconParams& econ,
                             const SplitFractions& fractions = {});

struct HarvestResult {
    ValueGrid yields;
    double total = 0.0;
};

// `applied` is total N per zone (planting + in-season), lb/acre.
HarvestResult harvest(const FieldGrid& field, const ValueGrid& applied, const YieldBounds& bounds,
                      const ResponseCoefficients& coefficients);

} // namespace agrisim
