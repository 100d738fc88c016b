#pragma once

// Worst-case attack search over discrete multiplier maps.
//
// The farmer's loss decomposes into independent per-zone terms once each
// zone's multiplier is fixed, so the unconstrained optimum is a per-zone
// argmax. The stealth budget couples zones through the net in-season
// fertilizer delta |sum_z (m_z - 1) * inseason_z| <= budget; that version is a
// multiple-choice knapsack solved by dynamic programming over the signed
// delta, discretized at budget_resolution with each zone's delta truncated
// toward zero. The budget is a detectability proxy: nothing in the model says
// an operator notices a net change of that size.

#include "agrisim/agronomy.hpp"
#include "agrisim/attack_engine.hpp"
#include "agrisim/economics.hpp"

#include <optional>
#include <span>
#include <vector>

namespace agrisim {

struct OptimizerConfig {
    std::vector<double> multiplier_set{0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 2.8};
    std::optional<double> stealth_budget;  // lb; nullopt means unbounded
    double budget_resolution = 1.0;        // lb

    void validate() const;
};

enum class Optimality { exact, heuristic };

const char* to_string(Optimality o);

struct AttackSolution {
    AttackScenario scenario;
    double loss = 0.0;                  // $, farmer's profit loss
    double net_fertilizer_delta = 0.0;  // lb, in-season applied minus prescribed
    Optimality optimality = Optimality::exact;
    // Truncated zone deltas can add up past the budget; false when the
    // undiscretized net delta exceeds it.
    bool within_budget = true;
};

struct ZoneLossEntry {
    double loss = 0.0;   // $
    double delta = 0.0;  // lb of in-season N relative to the prescription
};

class ZoneLossTable {
public:
    ZoneLossTable(std::size_t rows, std::size_t cols, std::vector<double> multipliers,
                  std::vector<ZoneLossEntry> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t zone_count() const noexcept { return rows_ * cols_; }
    std::span<const double> multipliers() const noexcept { return multipliers_; }

    const ZoneLossEntry& at(std::size_t zone, std::size_t option) const {
        return entries_[zone * multipliers_.size() + option];
    }

    // Option indices ordered by preference on ties: closest to 1, then smaller.
    const std::vector<std::size_t>& preference_order() const noexcept { return preference_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> multipliers_;
    std::vector<ZoneLossEntry> entries_;
    std::vector<std::size_t> preference_;
};

// loss(z, m) = corn_price * (EY_z - AY_z(m)) + nitrogen_price * (m - 1) * inseason_z
// where EY_z is the yield at the prescribed rate.
ZoneLossTable zone_loss_table(const FieldGrid& field, const Prescription& prescription,
                              const EconParams& econ, const YieldBounds& bounds,
                              std::span<const double> multiplier_set);

AttackSolution worst_case_unconstrained(const ZoneLossTable& table);

// nullopt budget delegates to worst_case_unconstrained.
AttackSolution worst_case_budgeted(const ZoneLossTable& table, std::optional<double> stealth_budget,
                                   double budget_resolution);

struct ScenarioEvaluation {
    std::string name;
    Ledger ledger;
    PassResult pass;
    ValueGrid expected_yields;
    ValueGrid actual_yields;
    ValueGrid zone_loss;  // $ per zone; sums to the ledger's profit loss
};

ScenarioEvaluation evaluate_scenario_detailed(const FieldGrid& field, const Prescription& prescription,
                                              const AttackScenario& scenario, const EconParams& econ,
                                              const YieldBounds& bounds);

// apply_attack -> harvest -> compile_ledger.
Ledger evaluate_scenario(const FieldGrid& field, const Prescription& prescription,
                         const AttackScenario& scenario, const EconParams& econ,
                         const YieldBounds& bounds);

AttackSolution optimize_attack(const FieldGrid& field, const Prescription& prescription,
                               const EconParams& econ, const YieldBounds& bounds,
                               const OptimizerConfig& config);

} // namespace agrisim
