#pragma once

// Run configuration and scenario documents (YAML, format_version 1).
//
//   format_version: 1
//   field: {seed: 42, rows: 10, cols: 10, ranges: {yield_goal: [150, 190], ...}}
//          | {path: field.csv} | {bundled: calibrated}
//   economics: {corn_price: 7.53, nitrogen_price: 1.10, timing_adj: 0.95}
//   split: {at_planting: 0.25, in_season: 0.75}
//   yield_bounds: {floor: 100, boost: 30}
//   scenarios: [1, 2, 3, identity, 2-plotted, my_attack.yaml, {name: ..., rules: [...]}]
//   optimizer: {multiplier_set: [0, 0.5, 1, 2], stealth_budget: 50 | unbounded,
//               budget_resolution: 1}
//   output_dir: out
//
// Scenario documents:
//
//   format_version: 1
//   name: starve-west
//   spoof_display: true
//   rules: [{zones: "A1:D10", multiplier: 0.45}]   # or grid: multipliers.csv
//
// Relative paths resolve against the directory of the document naming them.

#include "agrisim/adversary_opt.hpp"
#include "agrisim/agronomy.hpp"
#include "agrisim/attack_engine.hpp"
#include "agrisim/field_model.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace agrisim {

inline constexpr int kFormatVersion = 1;

struct FieldSource {
    enum class Kind { seed, file, calibrated };

    Kind kind = Kind::calibrated;
    std::uint64_t seed = 0;
    std::size_t rows = 10;
    std::size_t cols = 10;
    GenerationRanges ranges;
    std::filesystem::path path;
};

struct ScenarioRef {
    enum class Kind { builtin, plotted_scenario2, identity, file, inline_document };

    Kind kind = Kind::identity;
    int builtin_id = 0;
    std::filesystem::path path;
    ScenarioDocument document;
};

// "1" / "2" / "3" / "identity" / "2-plotted", anything else is a path.
ScenarioRef parse_scenario_ref(std::string_view text);

struct RunConfig {
    FieldSource field;
    EconParams econ;
    SplitFractions split;
    YieldBounds bounds;
    std::vector<ScenarioRef> scenarios;
    std::optional<OptimizerConfig> optimizer;
    std::filesystem::path output_dir = "out";

    void validate() const;
};

RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

ScenarioDocument parse_scenario_document(std::string_view text,
                                         const std::filesystem::path& base_dir);
AttackScenario load_scenario_file(const std::filesystem::path& path, std::size_t rows,
                                  std::size_t cols);

FieldGrid resolve_field(const FieldSource& source);
AttackScenario resolve_scenario(const ScenarioRef& ref, std::size_t rows, std::size_t cols);

// Stable JSON rendering of the resolved configuration; its digest identifies
// the run in reports.
std::string canonical_config(const RunConfig& config);

} // namespace agrisim
