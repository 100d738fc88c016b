#pragma once

#include "agrisim/adversary_opt.hpp"
#include "agrisim/agronomy.hpp"
#include "agrisim/economics.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agrisim {

struct ReportMetadata {
    std::optional<std::uint64_t> seed;
    std::string config_digest;
};

struct RunResults {
    ReportMetadata metadata;
    EconParams econ;
    Prescription prescription;
    ScenarioEvaluation control;
    std::vector<ScenarioEvaluation> scenarios;
    std::optional<AttackSolution> optimized;  // evaluated as the last entry of `scenarios`
    std::optional<OptimizerConfig> optimizer;
};

struct SummaryRow {
    std::string scenario;
    std::string kind;  // control | attack | optimized
    double expected_profit = 0.0;
    double actual_profit = 0.0;
    double loss = 0.0;
};

struct ReportDocument {
    nlohmann::ordered_json json;
    std::vector<SummaryRow> summary;
    std::vector<std::pair<std::string, std::string>> files;  // name -> contents, in emit order
};

// Money in the JSON is rounded to cents and N/yield totals to 0.1; the
// per-zone grids stay at full precision so the summary can be recomputed
// from them.
ReportDocument build_report(const RunResults& results);

// Writes report.json followed by every grid CSV into `out_dir`.
void emit_report(const ReportDocument& report, const std::filesystem::path& out_dir);

std::string format_summary_table(const std::vector<SummaryRow>& rows);

nlohmann::ordered_json ledger_json(const Ledger& ledger);
nlohmann::ordered_json stealth_json(const StealthMetrics& stealth);

} // namespace agrisim
