#include "agrisim/fixtures.hpp"

#include "agrisim/error.hpp"
#include "agrisim/grid_csv.hpp"

#include <algorithm>

namespace agrisim::fixtures {

namespace bundled {
extern const std::string_view figure4;
extern const std::string_view figure5;
extern const std::string_view figure6;
extern const std::string_view figure7;
extern const std::string_view figure8;
extern const std::string_view figure9;
extern const std::string_view scenario1_multipliers;
extern const std::string_view calibrated_field;
} // namespace bundled

std::string_view figure_csv(int figure) {
    switch (figure) {
    case 4: return bundled::figure4;
    case 5: return bundled::figure5;
    case 6: return bundled::figure6;
    case 7: return bundled::figure7;
    case 8: return bundled::figure8;
    case 9: return bundled::figure9;
    default: throw_data_error("no bundled grid for figure " + std::to_string(figure));
    }
}

ValueGrid figure_grid(int figure) { return read_grid_csv(figure_csv(figure)); }

std::string_view scenario1_multipliers_csv() { return bundled::scenario1_multipliers; }

std::string_view calibrated_field_csv() { return bundled::calibrated_field; }

FieldGrid calibrated_field() { return read_field_csv(bundled::calibrated_field); }

std::vector<FixtureChecksum> fixture_checksums() {
    using namespace targets;
    struct Spec {
        int figure;
        const char* description;
        double stated;
    };
    const Spec specs[] = {
        {4, "scenario 1 in-season N (lb)", kScenario1.inseason_n},
        {5, "scenario 1 yield (bu)", kScenario1.yield},
        {6, "scenario 2 in-season N (lb)", kScenario2.inseason_n},
        {7, "scenario 2 yield (bu)", kScenario2.yield},
        {8, "scenario 3 in-season N (lb)", kScenario3.inseason_n},
        {9, "scenario 3 yield (bu)", kScenario3.yield},
    };
    std::vector<FixtureChecksum> out;
    for (const auto& s : specs) {
        const ValueGrid g = figure_grid(s.figure);
        FixtureChecksum c;
        c.figure = s.figure;
        c.description = s.description;
        c.sum = grid_sum(g);
        c.min = *std::min_element(g.begin(), g.end());
        c.max = *std::max_element(g.begin(), g.end());
        c.stated_total = s.stated;
        out.push_back(c);
    }
    return out;
}

} // namespace agrisim::fixtures
