#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library's agronomy, economics or optimizer code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

struct ZoneInputs {
    double ey;
    double no3;
    double om;
    double credits;
};

inline double price_adj(double corn, double nitrogen) {
    const double r = corn / nitrogen;
    return 0.263 + 0.1256 * r - 0.00421 * std::pow(r, 2);
}

inline double recommend(const ZoneInputs& z, double pa, double ta) {
    const double bracket = 35 + (1.2 * z.ey) - (8 * z.no3) - (0.14 * z.ey * z.om) - z.credits;
    return bracket > 0 ? bracket * pa * ta : 0.0;
}

inline double response(double n, const ZoneInputs& z, double pa, double ta, double floor, double boost) {
    const double y = (n / (pa * ta) + (8 * z.no3) - 35 + z.credits) / (1.2 - (0.14 * z.om));
    return std::max(floor, std::min(z.ey + boost, y));
}

struct BruteForceResult {
    double loss = -1e300;
    std::vector<std::size_t> choice;
    double delta = 0.0;
    std::uint64_t maps = 0;
};

// Enumerates every multiplier map over `zones` and returns the loss-maximizing
// one among maps whose net in-season delta satisfies `feasible(delta_units,
// delta_exact)`. Loss is recomputed from field totals for every map.
template <typename Feasible>
BruteForceResult enumerate_maps(const std::vector<ZoneInputs>& zones, const std::vector<double>& planting,
                                const std::vector<double>& inseason, const std::vector<double>& multipliers,
                                double corn, double nitrogen, double ta, double floor, double boost,
                                double resolution, Feasible feasible) {
    const double pa = price_adj(corn, nitrogen);
    const std::size_t n = zones.size();
    double expected_yield = 0.0;
    double expected_n = 0.0;
    for (std::size_t z = 0; z < n; ++z) {
        expected_yield += response(planting[z] + inseason[z], zones[z], pa, ta, floor, boost);
        expected_n += planting[z] + inseason[z];
    }

    BruteForceResult best;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        ++best.maps;
        double actual_yield = 0.0;
        double actual_n = 0.0;
        double delta = 0.0;
        long long units = 0;
        for (std::size_t z = 0; z < n; ++z) {
            const double m = multipliers[idx[z]];
            const double applied = planting[z] + m * inseason[z];
            actual_yield += response(applied, zones[z], pa, ta, floor, boost);
            actual_n += applied;
            const double d = (m - 1.0) * inseason[z];
            delta += d;
            units += static_cast<long long>(std::trunc(d / resolution));
        }
        if (feasible(units, delta)) {
            const double loss = (expected_yield * corn - expected_n * nitrogen) -
                                (actual_yield * corn - actual_n * nitrogen);
            if (loss > best.loss + 1e-9) {
                best.loss = loss;
                best.choice = idx;
                best.delta = delta;
            }
        }
        std::size_t k = 0;
        while (k < n && ++idx[k] == multipliers.size()) idx[k++] = 0;
        if (k == n) break;
    }
    return best;
}

} // namespace oracle
