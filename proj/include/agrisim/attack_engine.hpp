#pragma once

// Rate-tampering attacks on the in-season side-dress pass.
//
// An attack is a per-zone multiplier on the commanded in-season rate. The
// at-planting share is never touched. With display spoofing the operator
// sees the commanded rate instead of the applied one.

#include "agrisim/agronomy.hpp"
#include "agrisim/grid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace agrisim {

struct AttackScenario {
    std::string name;
    ValueGrid multipliers;
    bool spoof_display = false;

    static AttackScenario identity(std::size_t rows, std::size_t cols);
    void validate() const;
};

// ids 2 and 3 need the 10x10 grid; id 1 is the bundled multiplier map.
AttackScenario builtin_scenario(int id, std::size_t rows = 10, std::size_t cols = 10);

// Scenario 2 with the in-season cut the reference per-zone grids actually
// show (55% of the commanded rate instead of 45%).
AttackScenario scenario2_as_plotted(std::size_t rows = 10, std::size_t cols = 10);

struct ScenarioRule {
    ZoneRange zones;
    double multiplier = 1.0;
};

// Parsed scenario document; rules and grid are mutually exclusive.
struct ScenarioDocument {
    std::string name;
    bool spoof_display = false;
    std::optional<ValueGrid> grid;
    std::vector<ScenarioRule> rules;
};

// Expands rules in order (later rules win); zones not covered stay at 1.0.
AttackScenario load_scenario(const ScenarioDocument& doc, std::size_t rows, std::size_t cols);

// Per-zone total N actually applied: planting + multiplier * inseason.
ValueGrid apply_attack(const Prescription& prescription, const AttackScenario& scenario);

struct AppliedRecord {
    ZoneId zone;
    double commanded = 0.0;  // in-season lb/acre the operator asked for
    double applied = 0.0;    // in-season lb/acre after tampering
    double displayed = 0.0;  // what the cab display reports
};

struct StealthMetrics {
    double total_delta = 0.0;         // lb, applied minus commanded in-season total
    double max_zone_deviation = 0.0;  // max |applied - commanded| / commanded
    double visible_delta = 0.0;       // lb, the same delta as seen on the display
};

struct PassResult {
    std::vector<AppliedRecord> records;  // in traversal order
    ValueGrid applied_total;             // planting + applied in-season, per zone
    StealthMetrics stealth;
};

// Row 1 left to right, row 2 right to left, ...
std::vector<ZoneId> serpentine_traversal(std::size_t rows, std::size_t cols);

// Replays the in-season pass zone by zone. Totals are reduced row-major so
// the traversal order never changes them.
PassResult simulate_pass(const Prescription& prescription, const AttackScenario& scenario,
                         const std::vector<ZoneId>& traversal);
PassResult simulate_pass(const Prescription& prescription, const AttackScenario& scenario);

} // namespace agrisim
