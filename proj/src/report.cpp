#include "agrisim/report.hpp"

#include "agrisim/error.hpp"
#include "agrisim/grid_csv.hpp"
#include "agrisim/version.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace agrisim {

namespace {

double round1(double v) {
    const double r = std::round(v * 10.0) / 10.0;
    return r == 0.0 ? 0.0 : r;
}

double cents(double v) {
    const double r = round_cents(v);
    return r == 0.0 ? 0.0 : r;
}

std::string slug(const std::string& name) {
    std::string out;
    for (char c : name) {
        const auto u = static_cast<unsigned char>(c);
        out += std::isalnum(u) ? static_cast<char>(std::tolower(u)) : '-';
    }
    return out.empty() ? "scenario" : out;
}

ordered_json grid_json(const ValueGrid& g) {
    auto rows = ordered_json::array();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        auto row = ordered_json::array();
        for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

ValueGrid inseason_applied(const PassResult& pass, std::size_t rows, std::size_t cols) {
    ValueGrid g(rows, cols);
    for (const auto& rec : pass.records) g.at(rec.zone) = rec.applied;
    return g;
}

} // namespace

ordered_json ledger_json(const Ledger& l) {
    return ordered_json{
        {"expected_yield_total", round1(l.expected_yield_total)},
        {"actual_yield_total", round1(l.actual_yield_total)},
        {"expected_n_total", round1(l.expected_n_total)},
        {"actual_n_total", round1(l.actual_n_total)},
        {"expected_revenue", cents(l.expected_revenue)},
        {"expected_cost", cents(l.expected_cost)},
        {"expected_profit", cents(l.expected_profit)},
        {"actual_revenue", cents(l.actual_revenue)},
        {"actual_cost", cents(l.actual_cost)},
        {"actual_profit", cents(l.actual_profit)},
        {"profit_loss_gain", cents(l.profit_loss_gain)},
    };
}

ordered_json stealth_json(const StealthMetrics& s) {
    return ordered_json{
        {"total_delta", round1(s.total_delta)},
        {"max_zone_deviation", std::round(s.max_zone_deviation * 1e4) / 1e4},
        {"visible_delta", round1(s.visible_delta)},
    };
}

ReportDocument build_report(const RunResults& res) {
    ReportDocument doc;
    const Prescription& p = res.prescription;

    ordered_json j;
    j["format_version"] = 1;
    j["metadata"] = {{"tool", kToolName},
                     {"version", kToolVersion},
                     {"seed", res.metadata.seed ? ordered_json(*res.metadata.seed) : ordered_json(nullptr)},
                     {"config_digest", res.metadata.config_digest}};
    j["economics"] = {{"corn_price", res.econ.corn_price},
                      {"nitrogen_price", res.econ.nitrogen_price},
                      {"timing_adj", res.econ.timing_adj},
                      {"price_adj", p.coefficients().price_adj}};
    j["control"] = {{"planting_n_total", round1(p.planting_total())},
                    {"inseason_n_total", round1(p.inseason_total())},
                    {"n_total", round1(p.total())},
                    {"expected_yield_total", round1(res.control.ledger.expected_yield_total)},
                    {"grids",
                     {{"prescribed_n", grid_json(p.n_rec_grid())},
                      {"planting_n", grid_json(p.planting_grid())},
                      {"inseason_n", grid_json(p.inseason_grid())},
                      {"expected_yield", grid_json(res.control.expected_yields)}}}};

    doc.files.emplace_back("control_prescribed_n.csv", write_grid_csv(p.n_rec_grid(), 1));
    doc.files.emplace_back("control_inseason_n.csv", write_grid_csv(p.inseason_grid(), 1));
    doc.files.emplace_back("control_expected_yield.csv", write_grid_csv(res.control.expected_yields, 1));

    doc.summary.push_back({"control", "control", res.control.ledger.expected_profit,
                           res.control.ledger.actual_profit, res.control.ledger.profit_loss_gain});

    auto scenarios = ordered_json::array();
    for (std::size_t i = 0; i < res.scenarios.size(); ++i) {
        const ScenarioEvaluation& ev = res.scenarios[i];
        const bool optimized = res.optimized && i + 1 == res.scenarios.size();
        const ValueGrid inseason = inseason_applied(ev.pass, p.rows(), p.cols());
        const std::string base = slug(ev.name);

        ordered_json s;
        s["name"] = ev.name;
        s["kind"] = optimized ? "optimized" : "attack";
        s["ledger"] = ledger_json(ev.ledger);
        s["stealth"] = stealth_json(ev.pass.stealth);
        if (optimized) {
            s["optimizer"] = {{"loss", cents(res.optimized->loss)},
                              {"net_fertilizer_delta", round1(res.optimized->net_fertilizer_delta)},
                              {"optimality", to_string(res.optimized->optimality)},
                              {"within_budget", res.optimized->within_budget}};
            if (res.optimizer) {
                s["optimizer"]["multiplier_set"] = res.optimizer->multiplier_set;
                s["optimizer"]["stealth_budget"] =
                    res.optimizer->stealth_budget ? ordered_json(*res.optimizer->stealth_budget)
                                                  : ordered_json("unbounded");
                s["optimizer"]["budget_resolution"] = res.optimizer->budget_resolution;
            }
        }
        s["grids"] = {{"applied_inseason_n", grid_json(inseason)},
                      {"applied_n", grid_json(ev.pass.applied_total)},
                      {"yield", grid_json(ev.actual_yields)},
                      {"zone_loss", grid_json(ev.zone_loss)}};
        scenarios.push_back(std::move(s));

        doc.files.emplace_back(base + "_inseason_n.csv", write_grid_csv(inseason, 1));
        doc.files.emplace_back(base + "_yield.csv", write_grid_csv(ev.actual_yields, 1));
        doc.files.emplace_back(base + "_zone_loss.csv", write_grid_csv(ev.zone_loss, 2));

        doc.summary.push_back({ev.name, optimized ? "optimized" : "attack", ev.ledger.expected_profit,
                               ev.ledger.actual_profit, ev.ledger.profit_loss_gain});
    }
    j["scenarios"] = std::move(scenarios);

    auto summary = ordered_json::array();
    for (const auto& row : doc.summary) {
        summary.push_back({{"scenario", row.scenario},
                           {"kind", row.kind},
                           {"expected_profit", cents(row.expected_profit)},
                           {"actual_profit", cents(row.actual_profit)},
                           {"loss", cents(row.loss)}});
    }
    j["summary"] = std::move(summary);

    doc.files.emplace(doc.files.begin(), "report.json", j.dump(2) + "\n");
    doc.json = std::move(j);
    return doc;
}

void emit_report(const ReportDocument& report, const fs::path& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw_data_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());
    for (const auto& [name, contents] : report.files) write_text_file(out_dir / name, contents);
}

std::string format_summary_table(const std::vector<SummaryRow>& rows) {
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-22s %-10s %16s %16s %14s\n", "scenario", "kind",
                  "expected profit", "actual profit", "loss");
    out += line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-22s %-10s %16s %16s %14s\n", r.scenario.c_str(),
                      r.kind.c_str(), format_number(r.expected_profit, 2).c_str(),
                      format_number(r.actual_profit, 2).c_str(), format_number(r.loss, 2).c_str());
        out += line;
    }
    return out;
}

} // namespace agrisim
