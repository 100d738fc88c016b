#include "agrisim/agronomy.hpp"

#include "agrisim/error.hpp"

#include <algorithm>
#include <cmath>

namespace agrisim {

namespace {

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

void check_coefficients(double price_adj, double timing_adj) {
    if (!positive(price_adj)) throw_data_error("price adjustment must be > 0");
    if (!positive(timing_adj)) throw_data_error("timing adjustment must be > 0");
}

} // namespace

void EconParams::validate() const {
    if (!positive(corn_price)) throw_data_error("corn_price must be > 0");
    if (!positive(nitrogen_price)) throw_data_error("nitrogen_price must be > 0");
    if (!(timing_adj > 0.0 && timing_adj <= 1.0)) throw_data_error("timing_adj must be in (0, 1]");
}

void YieldBounds::validate() const {
    if (!(floor >= 0.0) || !std::isfinite(floor)) throw_data_error("yield floor must be >= 0");
    if (!(boost >= 0.0) || !std::isfinite(boost)) throw_data_error("yield boost must be >= 0");
}

void SplitFractions::validate() const {
    if (!(at_planting >= 0.0 && at_planting <= 1.0) || !(in_season >= 0.0 && in_season <= 1.0)) {
        throw_data_error("split fractions must lie in [0, 1]");
    }
    if (std::abs(at_planting + in_season - 1.0) > 1e-12) {
        throw_data_error("split fractions must sum to 1");
    }
}

double price_adjustment(double corn_price, double nitrogen_price) {
    if (!positive(corn_price) || !positive(nitrogen_price)) {
        throw_data_error("prices must be > 0");
    }
    const double r = corn_price / nitrogen_price;
    return 0.263 + 0.1256 * r - 0.00421 * r * r;
}

ResponseCoefficients response_coefficients(const EconParams& econ) {
    econ.validate();
    ResponseCoefficients c{price_adjustment(econ.corn_price, econ.nitrogen_price), econ.timing_adj};
    check_coefficients(c.price_adj, c.timing_adj);
    return c;
}

double recommend_nitrogen(const Zone& zone, double price_adj, double timing_adj) {
    check_coefficients(price_adj, timing_adj);
    const double ey = zone.yield_goal;
    const double bracket = 35.0 + 1.2 * ey - 8.0 * zone.soil_nitrate -
                           0.14 * ey * zone.organic_matter - zone.n_credits;
    return std::max(0.0, bracket * price_adj * timing_adj);
}

SplitShares split_prescription(double n_rec, const SplitFractions& fractions) {
    if (!(n_rec >= 0.0)) throw_data_error("n_rec must be >= 0");
    fractions.validate();
    SplitShares s;
    if (fractions.at_planting >= 0.5) {
        s.planting = fractions.at_planting * n_rec;
        s.inseason = n_rec - s.planting;
    } else {
        s.inseason = fractions.in_season * n_rec;
        s.planting = n_rec - s.inseason;
    }
    return s;
}

double yield_from_rate(double n_rate, const Zone& zone, const YieldBounds& bounds,
                       double price_adj, double timing_adj) {
    if (!(n_rate >= 0.0)) throw_data_error("nitrogen rate must be >= 0");
    bounds.validate();
    check_coefficients(price_adj, timing_adj);
    const double denom = 1.2 - 0.14 * zone.organic_matter;
    if (!(denom > 0.0)) {
        throw_data_error("degenerate yield response for zone " + zone.id.to_string() +
                         " (organic matter >= 60/7 percent)");
    }
    const double unclamped =
        (n_rate / (price_adj * timing_adj) + 8.0 * zone.soil_nitrate - 35.0 + zone.n_credits) /
        denom;
    return std::max(bounds.floor, std::min(bounds.cap(zone), unclamped));
}

Prescription::Prescription(Grid<PrescriptionEntry> entries, ResponseCoefficients coefficients)
    : entries_(std::move(entries)), coefficients_(coefficients) {
    for (const auto& e : entries_) {
        planting_total_ += e.planting;
        inseason_total_ += e.inseason;
        total_ += e.n_rec;
    }
}

ValueGrid Prescription::n_rec_grid() const {
    ValueGrid g(rows(), cols());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = entries_[i].n_rec;
    return g;
}

ValueGrid Prescription::planting_grid() const {
    ValueGrid g(rows(), cols());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = entries_[i].planting;
    return g;
}

ValueGrid Prescription::inseason_grid() const {
    ValueGrid g(rows(), cols());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = entries_[i].inseason;
    return g;
}

Prescription prescribe_field(const FieldGrid& field, const EconParams& econ,
                             const SplitFractions& fractions) {
    require_valid_field(field);
    fractions.validate();
    const ResponseCoefficients coeffs = response_coefficients(econ);

    auto entries = field.make_grid<PrescriptionEntry>();
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double n_rec = recommend_nitrogen(field.zone(i), coeffs.price_adj, coeffs.timing_adj);
        const SplitShares shares = split_prescription(n_rec, fractions);
        entries[i] = PrescriptionEntry{n_rec, shares.planting, shares.inseason};
    }
    return Prescription(std::move(entries), coeffs);
}

HarvestResult harvest(const FieldGrid& field, const ValueGrid& applied, const YieldBounds& bounds,
                      const ResponseCoefficients& coefficients) {
    if (applied.rows() != field.rows() || applied.cols() != field.cols()) {
        throw_data_error("applied grid " + std::to_string(applied.rows()) + "x" +
                         std::to_string(applied.cols()) + " does not match field " +
                         std::to_string(field.rows()) + "x" + std::to_string(field.cols()));
    }
    bounds.validate();
    HarvestResult out{field.make_grid<double>(), 0.0};
    for (std::size_t i = 0; i < field.size(); ++i) {
        out.yields[i] = yield_from_rate(applied[i], field.zone(i), bounds, coefficients.price_adj,
                                        coefficients.timing_adj);
    }
    out.total = grid_sum(out.yields);
    return out;
}

} // namespace agrisim
