#include "agrisim/attack_engine.hpp"

#include "agrisim/error.hpp"
#include "agrisim/fixtures.hpp"
#include "agrisim/grid_csv.hpp"

#include <algorithm>
#include <cmath>

namespace agrisim {

namespace {

void require_builtin_grid(int id, std::size_t rows, std::size_t cols) {
    if (rows != 10 || cols != 10) {
        throw_data_error("builtin scenario " + std::to_string(id) + " is defined on a 10x10 grid, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    }
}

AttackScenario column_scenario(std::string name, const std::vector<double>& by_column) {
    AttackScenario s{std::move(name), ValueGrid(10, 10, 1.0), false};
    for (std::size_t r = 0; r < 10; ++r) {
        for (std::size_t c = 0; c < 10; ++c) s.multipliers(r, c) = by_column[c];
    }
    return s;
}

} // namespace

AttackScenario AttackScenario::identity(std::size_t rows, std::size_t cols) {
    return AttackScenario{"identity", ValueGrid(rows, cols, 1.0), false};
}

void AttackScenario::validate() const {
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        const double m = multipliers[i];
        if (!(m >= 0.0) || !std::isfinite(m)) {
            throw_data_error("scenario '" + name + "': multiplier at " +
                             multipliers.zone_at(i).to_string() + " must be a finite value >= 0");
        }
    }
}

AttackScenario builtin_scenario(int id, std::size_t rows, std::size_t cols) {
    switch (id) {
    case 1: {
        require_builtin_grid(id, rows, cols);
        AttackScenario s{"scenario-1", read_grid_csv(fixtures::scenario1_multipliers_csv()), false};
        s.validate();
        return s;
    }
    case 2:
        require_builtin_grid(id, rows, cols);
        // A-D and F-I starved to 45%, E and J flooded at 280%.
        return column_scenario("scenario-2",
                               {0.45, 0.45, 0.45, 0.45, 2.80, 0.45, 0.45, 0.45, 0.45, 2.80});
    case 3:
        require_builtin_grid(id, rows, cols);
        return column_scenario("scenario-3",
                               {1.00, 0.25, 2.00, 0.25, 1.00, 0.25, 2.00, 0.25, 2.00, 1.00});
    default:
        throw_data_error("unknown builtin scenario id " + std::to_string(id) + " (expected 1, 2 or 3)");
    }
}

AttackScenario scenario2_as_plotted(std::size_t rows, std::size_t cols) {
    require_builtin_grid(2, rows, cols);
    return column_scenario("scenario-2-plotted",
                           {0.55, 0.55, 0.55, 0.55, 2.80, 0.55, 0.55, 0.55, 0.55, 2.80});
}

AttackScenario load_scenario(const ScenarioDocument& doc, std::size_t rows, std::size_t cols) {
    if (doc.grid && !doc.rules.empty()) {
        throw_data_error("scenario '" + doc.name + "' gives both a grid and rules");
    }
    AttackScenario s{doc.name.empty() ? std::string("unnamed") : doc.name, ValueGrid(rows, cols, 1.0),
                     doc.spoof_display};
    if (doc.grid) {
        require_same_shape(s.multipliers, *doc.grid, "scenario '" + s.name + "' multiplier grid");
        s.multipliers = *doc.grid;
    }
    for (const auto& rule : doc.rules) {
        if (!(rule.multiplier >= 0.0) || !std::isfinite(rule.multiplier)) {
            throw_data_error("scenario '" + s.name + "': multiplier for " +
                             rule.zones.first.to_string() + ":" + rule.zones.last.to_string() +
                             " must be a finite value >= 0");
        }
        if (rule.zones.last.column >= cols || rule.zones.last.row > rows) {
            throw_data_error("scenario '" + s.name + "': zone range " + rule.zones.first.to_string() +
                             ":" + rule.zones.last.to_string() + " extends past the " +
                             std::to_string(rows) + "x" + std::to_string(cols) + " grid");
        }
        for (std::size_t r = rule.zones.first.row; r <= rule.zones.last.row; ++r) {
            for (std::size_t c = rule.zones.first.column; c <= rule.zones.last.column; ++c) {
                s.multipliers(r - 1, c) = rule.multiplier;
            }
        }
    }
    s.validate();
    return s;
}

ValueGrid apply_attack(const Prescription& prescription, const AttackScenario& scenario) {
    require_same_shape(prescription.entries(), scenario.multipliers,
                       "scenario '" + scenario.name + "'");
    scenario.validate();
    ValueGrid applied(prescription.rows(), prescription.cols());
    for (std::size_t i = 0; i < applied.size(); ++i) {
        const auto& e = prescription.entries()[i];
        applied[i] = e.planting + scenario.multipliers[i] * e.inseason;
    }
    return applied;
}

std::vector<ZoneId> serpentine_traversal(std::size_t rows, std::size_t cols) {
    std::vector<ZoneId> order;
    order.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < cols; ++k) {
            const std::size_t c = (r % 2 == 0) ? k : cols - 1 - k;
            order.push_back(ZoneId{c, r + 1});
        }
    }
    return order;
}

PassResult simulate_pass(const Prescription& prescription, const AttackScenario& scenario,
                         const std::vector<ZoneId>& traversal) {
    const auto& entries = prescription.entries();
    require_same_shape(entries, scenario.multipliers, "scenario '" + scenario.name + "'");
    scenario.validate();

    if (traversal.size() != entries.size()) {
        throw_data_error("traversal visits " + std::to_string(traversal.size()) + " zones, field has " +
                         std::to_string(entries.size()));
    }
    std::vector<char> visited(entries.size(), 0);
    PassResult out;
    out.records.reserve(traversal.size());
    Grid<AppliedRecord> by_zone(entries.rows(), entries.cols());

    // The implement's rate controller: the cab commands the prescribed rate,
    // the tampered command on the bus carries multiplier * rate.
    for (const ZoneId& id : traversal) {
        const std::size_t i = entries.index_of(id);
        if (visited[i]) throw_data_error("traversal visits zone " + id.to_string() + " twice");
        visited[i] = 1;

        AppliedRecord rec;
        rec.zone = id;
        rec.commanded = entries[i].inseason;
        rec.applied = scenario.multipliers[i] * rec.commanded;
        rec.displayed = scenario.spoof_display ? rec.commanded : rec.applied;
        out.records.push_back(rec);
        by_zone[i] = rec;
    }

    out.applied_total = ValueGrid(entries.rows(), entries.cols());
    double commanded = 0.0;
    double applied = 0.0;
    double displayed = 0.0;
    for (std::size_t i = 0; i < by_zone.size(); ++i) {
        const AppliedRecord& rec = by_zone[i];
        out.applied_total[i] = entries[i].planting + rec.applied;
        commanded += rec.commanded;
        applied += rec.applied;
        displayed += rec.displayed;
        if (rec.commanded > 0.0) {
            out.stealth.max_zone_deviation = std::max(
                out.stealth.max_zone_deviation, std::abs(rec.applied - rec.commanded) / rec.commanded);
        }
    }
    out.stealth.total_delta = applied - commanded;
    out.stealth.visible_delta = displayed - commanded;
    return out;
}

PassResult simulate_pass(const Prescription& prescription, const AttackScenario& scenario) {
    return simulate_pass(prescription, scenario,
                         serpentine_traversal(prescription.rows(), prescription.cols()));
}

} // namespace agrisim
