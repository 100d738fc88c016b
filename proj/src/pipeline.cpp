#include "agrisim/pipeline.hpp"

#include "agrisim/error.hpp"
#include "agrisim/grid_csv.hpp"

#include <json.hpp>

#include <cmath>

namespace fs = std::filesystem;

namespace agrisim {

namespace {

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw_data_error("cannot create output directory '" + dir.string() + "': " + ec.message());
}

ReportMetadata metadata_for(const RunConfig& config) {
    ReportMetadata m;
    if (config.field.kind == FieldSource::Kind::seed) m.seed = config.field.seed;
    m.config_digest = digest_hex(canonical_config(config));
    return m;
}

} // namespace

void run_gen_field(const FieldGrid& field, const fs::path& out_dir) {
    ensure_dir(out_dir);
    write_text_file(out_dir / "field.csv", write_field_csv(field));
}

Prescription run_prescribe(const RunConfig& config, const FieldGrid& field, const fs::path& out_dir) {
    Prescription p = prescribe_field(field, config.econ, config.split);
    ensure_dir(out_dir);
    write_text_file(out_dir / "prescribed_n.csv", write_grid_csv(p.n_rec_grid()));
    write_text_file(out_dir / "planting_n.csv", write_grid_csv(p.planting_grid()));
    write_text_file(out_dir / "inseason_n.csv", write_grid_csv(p.inseason_grid()));
    return p;
}

PassResult run_attack(const RunConfig& config, const FieldGrid& field, const AttackScenario& scenario,
                      const fs::path& out_dir) {
    const Prescription p = prescribe_field(field, config.econ, config.split);
    PassResult pass = simulate_pass(p, scenario);

    ValueGrid inseason(p.rows(), p.cols());
    std::string records = "order,zone,commanded,applied,displayed\n";
    for (std::size_t i = 0; i < pass.records.size(); ++i) {
        const auto& r = pass.records[i];
        inseason.at(r.zone) = r.applied;
        records += std::to_string(i + 1) + "," + r.zone.to_string() + "," + format_number(r.commanded) +
                   "," + format_number(r.applied) + "," + format_number(r.displayed) + "\n";
    }
    nlohmann::ordered_json stealth = stealth_json(pass.stealth);
    stealth = {{"scenario", scenario.name},
               {"spoof_display", scenario.spoof_display},
               {"total_delta", stealth["total_delta"]},
               {"max_zone_deviation", stealth["max_zone_deviation"]},
               {"visible_delta", stealth["visible_delta"]}};

    ensure_dir(out_dir);
    write_text_file(out_dir / "applied_inseason_n.csv", write_grid_csv(inseason));
    write_text_file(out_dir / "applied_n.csv", write_grid_csv(pass.applied_total));
    write_text_file(out_dir / "pass.csv", records);
    write_text_file(out_dir / "stealth.json", stealth.dump(2) + "\n");
    return pass;
}

HarvestResult run_harvest(const RunConfig& config, const FieldGrid& field, const ValueGrid& applied,
                          const fs::path& out_dir) {
    require_valid_field(field);
    const HarvestResult h = harvest(field, applied, config.bounds, response_coefficients(config.econ));
    ensure_dir(out_dir);
    write_text_file(out_dir / "yield.csv", write_grid_csv(h.yields));
    return h;
}

RunResults evaluate_run(const RunConfig& config, const FieldGrid& field) {
    config.validate();
    RunResults res;
    res.metadata = metadata_for(config);
    res.econ = config.econ;
    res.prescription = prescribe_field(field, config.econ, config.split);
    res.control = evaluate_scenario_detailed(field, res.prescription,
                                             AttackScenario::identity(field.rows(), field.cols()),
                                             config.econ, config.bounds);
    res.control.name = "control";

    for (const auto& ref : config.scenarios) {
        const AttackScenario s = resolve_scenario(ref, field.rows(), field.cols());
        res.scenarios.push_back(
            evaluate_scenario_detailed(field, res.prescription, s, config.econ, config.bounds));
    }
    if (config.optimizer) {
        res.optimizer = config.optimizer;
        res.optimized = optimize_attack(field, res.prescription, config.econ, config.bounds, *config.optimizer);
        ScenarioEvaluation ev = evaluate_scenario_detailed(field, res.prescription, res.optimized->scenario,
                                                           config.econ, config.bounds);
        if (std::abs(ev.ledger.profit_loss_gain - res.optimized->loss) > 0.01) {
            throw_internal_error("optimizer loss " + format_number(res.optimized->loss, 2) +
                                 " disagrees with the evaluated ledger " +
                                 format_number(ev.ledger.profit_loss_gain, 2));
        }
        res.scenarios.push_back(std::move(ev));
    }
    return res;
}

ReportDocument run_report(const RunConfig& config, const FieldGrid& field, const fs::path& out_dir) {
    ReportDocument doc = build_report(evaluate_run(config, field));
    emit_report(doc, out_dir);
    return doc;
}

AttackSolution run_optimize(const RunConfig& config, const FieldGrid& field, const fs::path& out_dir) {
    RunConfig cfg = config;
    if (!cfg.optimizer) cfg.optimizer = OptimizerConfig{};
    RunResults res = evaluate_run(cfg, field);
    const AttackSolution solution = *res.optimized;

    ReportDocument doc = build_report(res);
    nlohmann::ordered_json j;
    j["format_version"] = 1;
    j["loss"] = round_cents(solution.loss);
    j["net_fertilizer_delta"] = solution.net_fertilizer_delta;
    j["optimality"] = to_string(solution.optimality);
    j["within_budget"] = solution.within_budget;
    j["multiplier_set"] = cfg.optimizer->multiplier_set;
    j["stealth_budget"] = cfg.optimizer->stealth_budget ? nlohmann::ordered_json(*cfg.optimizer->stealth_budget)
                                                        : nlohmann::ordered_json("unbounded");
    j["budget_resolution"] = cfg.optimizer->budget_resolution;
    doc.files.emplace_back("solution.json", j.dump(2) + "\n");
    doc.files.emplace_back("optimized_multipliers.csv", write_grid_csv(solution.scenario.multipliers));
    emit_report(doc, out_dir);
    return solution;
}

} // namespace agrisim
