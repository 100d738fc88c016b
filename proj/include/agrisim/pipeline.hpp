#pragma once

// File-producing runs behind each CLI subcommand.

#include "agrisim/adversary_opt.hpp"
#include "agrisim/config.hpp"
#include "agrisim/report.hpp"

#include <filesystem>

namespace agrisim {

// Writes field.csv.
void run_gen_field(const FieldGrid& field, const std::filesystem::path& out_dir);

// Writes prescribed_n.csv, planting_n.csv and inseason_n.csv.
Prescription run_prescribe(const RunConfig& config, const FieldGrid& field,
                           const std::filesystem::path& out_dir);

// Writes applied_inseason_n.csv, applied_n.csv, pass.csv (records in
// traversal order) and stealth.json.
PassResult run_attack(const RunConfig& config, const FieldGrid& field, const AttackScenario& scenario,
                      const std::filesystem::path& out_dir);

// Writes yield.csv. `applied` is total N per zone.
HarvestResult run_harvest(const RunConfig& config, const FieldGrid& field, const ValueGrid& applied,
                          const std::filesystem::path& out_dir);

// Evaluates the control case, each configured scenario and (if configured)
// the optimizer's worst case.
RunResults evaluate_run(const RunConfig& config, const FieldGrid& field);

ReportDocument run_report(const RunConfig& config, const FieldGrid& field,
                          const std::filesystem::path& out_dir);

// Writes solution.json and optimized_multipliers.csv next to a full report.
AttackSolution run_optimize(const RunConfig& config, const FieldGrid& field,
                            const std::filesystem::path& out_dir);

} // namespace agrisim
