// agrisim command line. Talks to the simulator only through the C API.

#include "agrisim/agrisim.h"

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>

namespace {

struct ConfigDeleter {
    void operator()(agrisim_config* c) const { agrisim_config_free(c); }
};
struct FieldDeleter {
    void operator()(agrisim_field* f) const { agrisim_field_free(f); }
};
struct ScenarioDeleter {
    void operator()(agrisim_scenario* s) const { agrisim_scenario_free(s); }
};
struct StringDeleter {
    void operator()(char* s) const { agrisim_string_free(s); }
};

using ConfigPtr = std::unique_ptr<agrisim_config, ConfigDeleter>;
using FieldPtr = std::unique_ptr<agrisim_field, FieldDeleter>;
using ScenarioPtr = std::unique_ptr<agrisim_scenario, ScenarioDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a status after the diagnostic has been printed.
struct Exit {
    int code;
};

void check(agrisim_status status) {
    if (status != AGRISIM_OK) {
        std::fprintf(stderr, "agrisim: error: %s\n", agrisim_last_error());
        throw Exit{static_cast<int>(status)};
    }
}

struct CommonOptions {
    std::optional<std::uint64_t> seed;
    std::string config;
    std::string out;
    std::string field;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--seed", opts.seed, "Generate the field from this seed (10x10, default ranges)");
    cmd->add_option("--config", opts.config, "Run configuration (YAML)");
    cmd->add_option("--out", opts.out, "Output directory");
}

ConfigPtr load_config(const CommonOptions& opts) {
    agrisim_config* raw = nullptr;
    if (opts.config.empty()) {
        check(agrisim_config_default(&raw));
    } else {
        check(agrisim_config_load(opts.config.c_str(), &raw));
    }
    ConfigPtr cfg(raw);
    if (opts.seed) check(agrisim_config_set_seed(cfg.get(), *opts.seed));
    if (!opts.out.empty()) check(agrisim_config_set_output_dir(cfg.get(), opts.out.c_str()));
    return cfg;
}

FieldPtr load_field(const CommonOptions& opts, const agrisim_config* cfg) {
    agrisim_field* raw = nullptr;
    if (!opts.field.empty()) {
        check(agrisim_field_load(opts.field.c_str(), &raw));
    } else {
        check(agrisim_field_from_config(cfg, &raw));
    }
    return FieldPtr(raw);
}

void print_stealth(const agrisim_stealth& s) {
    std::printf("in-season N delta:   %.1f lb\n", s.total_delta);
    std::printf("max zone deviation:  %.1f %%\n", s.max_zone_deviation * 100.0);
    std::printf("visible delta:       %.1f lb\n", s.visible_delta);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulate rate-tampering attacks on a variable-rate nitrogen side-dress applicator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(agrisim_version()));

    CommonOptions opts;
    std::string scenario_ref = "identity";
    std::string applied_path;
    std::size_t rows = 10;
    std::size_t cols = 10;
    std::uint64_t first_seed = 1;
    std::uint64_t last_seed = 200000;

    auto* gen = app.add_subcommand("gen-field", "Generate a seeded field and write field.csv");
    add_common(gen, opts);
    gen->add_option("--rows", rows, "Grid rows")->check(CLI::PositiveNumber);
    gen->add_option("--cols", cols, "Grid columns")->check(CLI::PositiveNumber);

    auto* prescribe = app.add_subcommand("prescribe", "Write the N prescription grids for a field");
    add_common(prescribe, opts);
    prescribe->add_option("--field", opts.field, "Field CSV");

    auto* attack = app.add_subcommand("attack", "Replay the in-season pass under an attack scenario");
    add_common(attack, opts);
    attack->add_option("--field", opts.field, "Field CSV");
    attack->add_option("--scenario", scenario_ref, "1, 2, 3, identity, 2-plotted or a scenario file")
        ->capture_default_str();

    auto* harvest = app.add_subcommand("harvest", "Compute yields from a field and an applied-N grid");
    add_common(harvest, opts);
    harvest->add_option("--field", opts.field, "Field CSV");
    harvest->add_option("--applied", applied_path, "Total applied N grid CSV (lb/acre)")
        ->required();

    auto* report = app.add_subcommand("report", "Run the full pipeline and write report.json plus grids");
    add_common(report, opts);
    report->add_option("--field", opts.field, "Field CSV");

    auto* optimize = app.add_subcommand("optimize", "Search for the worst-case attack map");
    add_common(optimize, opts);
    optimize->add_option("--field", opts.field, "Field CSV");

    auto* reproduce = app.add_subcommand("reproduce-paper",
                                         "Compare computed aggregates with the reference targets");
    add_common(reproduce, opts);

    auto* calibrate = app.add_subcommand("calibrate", "Search seeds for the calibrated stand-in field");
    add_common(calibrate, opts);
    calibrate->add_option("--first", first_seed, "First seed")->capture_default_str();
    calibrate->add_option("--last", last_seed, "Last seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "agrisim: usage error: %s\n", e.what());
        std::fprintf(stderr, "run 'agrisim --help' for the list of subcommands and flags\n");
        return AGRISIM_ERR_USAGE;
    }

    try {
        ConfigPtr cfg = load_config(opts);
        const std::string out_dir = agrisim_config_output_dir(cfg.get());

        if (gen->parsed()) {
            agrisim_field* raw = nullptr;
            if (opts.seed) {
                check(agrisim_field_generate(*opts.seed, rows, cols, &raw));
            } else {
                check(agrisim_field_from_config(cfg.get(), &raw));
            }
            FieldPtr field(raw);
            check(agrisim_run_gen_field(field.get(), out_dir.c_str()));
            std::printf("wrote %s/field.csv (%zux%zu)\n", out_dir.c_str(), agrisim_field_rows(field.get()),
                        agrisim_field_cols(field.get()));
        } else if (prescribe->parsed()) {
            FieldPtr field = load_field(opts, cfg.get());
            agrisim_prescription_totals totals{};
            check(agrisim_run_prescribe(cfg.get(), field.get(), out_dir.c_str(), &totals));
            std::printf("planting N:   %.1f lb\nin-season N:  %.1f lb\ntotal N:      %.1f lb\n",
                        totals.planting, totals.inseason, totals.total);
        } else if (attack->parsed()) {
            FieldPtr field = load_field(opts, cfg.get());
            agrisim_scenario* raw = nullptr;
            check(agrisim_scenario_resolve(scenario_ref.c_str(), agrisim_field_rows(field.get()),
                                           agrisim_field_cols(field.get()), &raw));
            ScenarioPtr scenario(raw);
            agrisim_stealth stealth{};
            check(agrisim_run_attack(cfg.get(), field.get(), scenario.get(), out_dir.c_str(), &stealth));
            print_stealth(stealth);
        } else if (harvest->parsed()) {
            FieldPtr field = load_field(opts, cfg.get());
            double total = 0.0;
            check(agrisim_run_harvest(cfg.get(), field.get(), applied_path.c_str(), out_dir.c_str(), &total));
            std::printf("total yield: %.1f bu\n", total);
        } else if (report->parsed()) {
            FieldPtr field = load_field(opts, cfg.get());
            char* raw = nullptr;
            check(agrisim_run_report(cfg.get(), field.get(), out_dir.c_str(), &raw));
            StringPtr summary(raw);
            std::fputs(summary.get(), stdout);
            std::printf("wrote %s/report.json\n", out_dir.c_str());
        } else if (optimize->parsed()) {
            FieldPtr field = load_field(opts, cfg.get());
            agrisim_solution sol{};
            check(agrisim_run_optimize(cfg.get(), field.get(), out_dir.c_str(), &sol));
            std::printf("worst-case loss:     $%.2f\n", sol.loss);
            std::printf("net in-season delta: %.1f lb\n", sol.net_fertilizer_delta);
            std::printf("optimality:          %s\n", sol.exact ? "exact" : "heuristic");
            if (!sol.within_budget) std::printf("note: truncated zone deltas put the net delta past the budget\n");
            std::printf("wrote %s/solution.json\n", out_dir.c_str());
        } else if (reproduce->parsed()) {
            char* raw = nullptr;
            int passed = 0;
            check(agrisim_reproduce_paper(&raw, &passed));
            StringPtr table(raw);
            std::fputs(table.get(), stdout);
            return passed ? 0 : AGRISIM_ERR_INTERNAL;
        } else if (calibrate->parsed()) {
            std::uint64_t seed = 0;
            double yield = 0.0;
            double n = 0.0;
            check(agrisim_calibrate(first_seed, last_seed, &seed, &yield, &n));
            std::printf("seed %" PRIu64 ": control yield %.2f bu, total N %.2f lb\n", seed, yield, n);
        }
    } catch (const Exit& e) {
        return e.code;
    }
    return 0;
}
