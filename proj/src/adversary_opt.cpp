#include "agrisim/adversary_opt.hpp"

#include "agrisim/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace agrisim {

namespace {

// Upper bound on DP cells (zones x signed-delta states) kept for backtracking.
constexpr std::int64_t kMaxDpCells = 400'000'000;

AttackSolution assemble(const ZoneLossTable& table, const std::vector<std::size_t>& choice,
                        std::string name) {
    AttackSolution sol;
    sol.scenario = AttackScenario{std::move(name), ValueGrid(table.rows(), table.cols(), 1.0), false};
    for (std::size_t z = 0; z < table.zone_count(); ++z) {
        const auto& e = table.at(z, choice[z]);
        sol.scenario.multipliers[z] = table.multipliers()[choice[z]];
        sol.loss += e.loss;
        sol.net_fertilizer_delta += e.delta;
    }
    sol.optimality = Optimality::exact;
    return sol;
}

} // namespace

const char* to_string(Optimality o) {
    return o == Optimality::exact ? "exact" : "heuristic";
}

void OptimizerConfig::validate() const {
    if (multiplier_set.empty()) throw_data_error("optimizer multiplier_set must not be empty");
    for (std::size_t i = 0; i < multiplier_set.size(); ++i) {
        if (!(multiplier_set[i] >= 0.0) || !std::isfinite(multiplier_set[i])) {
            throw_data_error("optimizer multipliers must be finite and >= 0");
        }
        if (i > 0 && !(multiplier_set[i] > multiplier_set[i - 1])) {
            throw_data_error("optimizer multiplier_set must be strictly ascending");
        }
    }
    if (std::find(multiplier_set.begin(), multiplier_set.end(), 1.0) == multiplier_set.end()) {
        throw_data_error("optimizer multiplier_set must contain 1.0");
    }
    if (stealth_budget && !(*stealth_budget >= 0.0 && std::isfinite(*stealth_budget))) {
        throw_data_error("stealth_budget must be >= 0");
    }
    if (!(budget_resolution > 0.0) || !std::isfinite(budget_resolution)) {
        throw_data_error("budget_resolution must be > 0");
    }
}

ZoneLossTable::ZoneLossTable(std::size_t rows, std::size_t cols, std::vector<double> multipliers,
                             std::vector<ZoneLossEntry> entries)
    : rows_(rows), cols_(cols), multipliers_(std::move(multipliers)), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_ * multipliers_.size()) {
        throw_internal_error("zone loss table size mismatch");
    }
    preference_.resize(multipliers_.size());
    std::iota(preference_.begin(), preference_.end(), std::size_t{0});
    std::stable_sort(preference_.begin(), preference_.end(), [this](std::size_t a, std::size_t b) {
        const double da = std::abs(multipliers_[a] - 1.0);
        const double db = std::abs(multipliers_[b] - 1.0);
        if (da != db) return da < db;
        return multipliers_[a] < multipliers_[b];
    });
}

ZoneLossTable zone_loss_table(const FieldGrid& field, const Prescription& prescription,
                              const EconParams& econ, const YieldBounds& bounds,
                              std::span<const double> multiplier_set) {
    require_same_shape(prescription.entries(), field.make_grid<char>(), "prescription");
    econ.validate();
    bounds.validate();
    if (multiplier_set.empty()) throw_data_error("multiplier set must not be empty");

    const ResponseCoefficients& k = prescription.coefficients();
    std::vector<ZoneLossEntry> entries;
    entries.reserve(field.size() * multiplier_set.size());
    for (std::size_t z = 0; z < field.size(); ++z) {
        const Zone& zone = field.zone(z);
        const PrescriptionEntry& p = prescription.entries()[z];
        const double expected = yield_from_rate(p.n_rec, zone, bounds, k.price_adj, k.timing_adj);
        for (double m : multiplier_set) {
            if (!(m >= 0.0)) throw_data_error("multipliers must be >= 0");
            const double actual =
                yield_from_rate(p.planting + m * p.inseason, zone, bounds, k.price_adj, k.timing_adj);
            const double delta = (m - 1.0) * p.inseason;
            entries.push_back(
                {econ.corn_price * (expected - actual) + econ.nitrogen_price * delta, delta});
        }
    }
    return ZoneLossTable(field.rows(), field.cols(),
                         std::vector<double>(multiplier_set.begin(), multiplier_set.end()),
                         std::move(entries));
}

AttackSolution worst_case_unconstrained(const ZoneLossTable& table) {
    std::vector<std::size_t> choice(table.zone_count());
    for (std::size_t z = 0; z < table.zone_count(); ++z) {
        std::size_t best = table.preference_order().front();
        for (std::size_t j : table.preference_order()) {
            if (table.at(z, j).loss > table.at(z, best).loss) best = j;
        }
        choice[z] = best;
    }
    return assemble(table, choice, "optimized");
}

AttackSolution worst_case_budgeted(const ZoneLossTable& table, std::optional<double> stealth_budget,
                                   double budget_resolution) {
    if (!stealth_budget) return worst_case_unconstrained(table);
    if (!(*stealth_budget >= 0.0)) throw_data_error("stealth budget must be >= 0");
    if (!(budget_resolution > 0.0)) throw_data_error("budget resolution must be > 0");

    const std::size_t zones = table.zone_count();
    const std::size_t options = table.multipliers().size();
    const auto budget = static_cast<std::int64_t>(std::floor(*stealth_budget / budget_resolution));

    std::vector<std::int64_t> units(zones * options);
    for (std::size_t z = 0; z < zones; ++z) {
        for (std::size_t j = 0; j < options; ++j) {
            units[z * options + j] =
                static_cast<std::int64_t>(std::trunc(table.at(z, j).delta / budget_resolution));
        }
    }

    // Reachable range of the remaining zones' summed delta, for pruning
    // partial sums that can no longer land inside [-budget, budget].
    std::vector<std::int64_t> rest_min(zones + 1, 0);
    std::vector<std::int64_t> rest_max(zones + 1, 0);
    for (std::size_t z = zones; z-- > 0;) {
        auto first = units.begin() + static_cast<std::ptrdiff_t>(z * options);
        auto [lo, hi] = std::minmax_element(first, first + static_cast<std::ptrdiff_t>(options));
        rest_min[z] = rest_min[z + 1] + *lo;
        rest_max[z] = rest_max[z + 1] + *hi;
    }
    const std::int64_t lo = rest_min[0];
    const std::int64_t width = rest_max[0] - lo + 1;
    if (width * static_cast<std::int64_t>(zones) > kMaxDpCells) {
        throw_data_error("budget_resolution is too fine for this field (DP would need " +
                         std::to_string(width * static_cast<std::int64_t>(zones)) + " cells)");
    }

    constexpr double kUnreached = -std::numeric_limits<double>::infinity();
    constexpr std::uint8_t kNone = 0xff;
    if (options >= kNone) throw_data_error("multiplier set is too large");

    std::vector<double> cur(static_cast<std::size_t>(width), kUnreached);
    std::vector<double> next(static_cast<std::size_t>(width));
    std::vector<std::uint8_t> choice(zones * static_cast<std::size_t>(width), kNone);
    cur[static_cast<std::size_t>(-lo)] = 0.0;

    for (std::size_t z = 0; z < zones; ++z) {
        std::fill(next.begin(), next.end(), kUnreached);
        std::uint8_t* row = choice.data() + z * static_cast<std::size_t>(width);
        for (std::int64_t s = 0; s < width; ++s) {
            const double base = cur[static_cast<std::size_t>(s)];
            if (base == kUnreached) continue;
            for (std::size_t j : table.preference_order()) {
                const std::int64_t s2 = s + units[z * options + j];
                const std::int64_t sum = s2 + lo;
                if (sum + rest_min[z + 1] > budget || sum + rest_max[z + 1] < -budget) continue;
                const double value = base + table.at(z, j).loss;
                if (value > next[static_cast<std::size_t>(s2)]) {
                    next[static_cast<std::size_t>(s2)] = value;
                    row[s2] = static_cast<std::uint8_t>(j);
                }
            }
        }
        std::swap(cur, next);
    }

    // Best final state; ties go to the smaller net delta.
    std::int64_t best = -1;
    for (std::int64_t s = 0; s < width; ++s) {
        const std::int64_t sum = s + lo;
        if (sum < -budget || sum > budget || cur[static_cast<std::size_t>(s)] == kUnreached) continue;
        if (best < 0 || cur[static_cast<std::size_t>(s)] > cur[static_cast<std::size_t>(best)] ||
            (cur[static_cast<std::size_t>(s)] == cur[static_cast<std::size_t>(best)] &&
             std::llabs(sum) < std::llabs(best + lo))) {
            best = s;
        }
    }
    if (best < 0) throw_internal_error("stealth DP found no feasible map; identity must be feasible");

    std::vector<std::size_t> picked(zones);
    std::int64_t s = best;
    for (std::size_t z = zones; z-- > 0;) {
        const std::uint8_t j = choice[z * static_cast<std::size_t>(width) + static_cast<std::size_t>(s)];
        if (j == kNone) throw_internal_error("stealth DP backtrack hit an unreached state");
        picked[z] = j;
        s -= units[z * options + j];
    }
    AttackSolution sol = assemble(table, picked, "optimized");
    sol.within_budget = std::abs(sol.net_fertilizer_delta) <= *stealth_budget;
    return sol;
}

ScenarioEvaluation evaluate_scenario_detailed(const FieldGrid& field, const Prescription& prescription,
                                              const AttackScenario& scenario, const EconParams& econ,
                                              const YieldBounds& bounds) {
    require_same_shape(prescription.entries(), field.make_grid<char>(), "prescription");
    ScenarioEvaluation ev;
    ev.name = scenario.name;
    ev.pass = simulate_pass(prescription, scenario);

    const ValueGrid prescribed = prescription.n_rec_grid();
    const HarvestResult expected = harvest(field, prescribed, bounds, prescription.coefficients());
    const HarvestResult actual = harvest(field, ev.pass.applied_total, bounds, prescription.coefficients());
    ev.expected_yields = expected.yields;
    ev.actual_yields = actual.yields;

    ev.ledger = compile_ledger(FieldTotals{expected.total, prescription.total()},
                               FieldTotals{actual.total, grid_sum(ev.pass.applied_total)}, econ);

    ev.zone_loss = field.make_grid<double>();
    for (std::size_t i = 0; i < field.size(); ++i) {
        ev.zone_loss[i] = econ.corn_price * (expected.yields[i] - actual.yields[i]) +
                          econ.nitrogen_price * (ev.pass.applied_total[i] - prescribed[i]);
    }
    return ev;
}

Ledger evaluate_scenario(const FieldGrid& field, const Prescription& prescription,
                         const AttackScenario& scenario, const EconParams& econ,
                         const YieldBounds& bounds) {
    return evaluate_scenario_detailed(field, prescription, scenario, econ, bounds).ledger;
}

AttackSolution optimize_attack(const FieldGrid& field, const Prescription& prescription,
                               const EconParams& econ, const YieldBounds& bounds,
                               const OptimizerConfig& config) {
    config.validate();
    const ZoneLossTable table = zone_loss_table(field, prescription, econ, bounds, config.multiplier_set);
    return worst_case_budgeted(table, config.stealth_budget, config.budget_resolution);
}

} // namespace agrisim
