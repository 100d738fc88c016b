#include "test_support.hpp"

#include <agrisim/config.hpp>
#include <agrisim/error.hpp>
#include <agrisim/fixtures.hpp>
#include <agrisim/grid_csv.hpp>
#include <agrisim/pipeline.hpp>
#include <agrisim/report.hpp>

#include <doctest.h>

using namespace agrisim;
namespace fs = std::filesystem;

namespace {

std::string read_fixture(const std::string& name) {
    return read_text_file(test_support::data_dir() / "fixtures" / name);
}

RunConfig calibrated_config() {
    RunConfig cfg;
    cfg.field.kind = FieldSource::Kind::calibrated;
    for (int id : {1, 2, 3}) {
        ScenarioRef ref;
        ref.kind = ScenarioRef::Kind::builtin;
        ref.builtin_id = id;
        cfg.scenarios.push_back(ref);
    }
    return cfg;
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) out[e.path().filename().string()] = read_text_file(e.path());
    return out;
}

} // namespace

TEST_CASE("grid CSV reads the bundled figures") {
    auto fig4 = read_grid_csv(fixtures::figure_csv(4));
    REQUIRE(fig4.rows() == 10);
    REQUIRE(fig4.cols() == 10);
    CHECK(fig4.at(ZoneId::parse("A1")) == 110);
    CHECK(fig4.at(ZoneId::parse("B5")) == 48);
    CHECK(fig4.at(ZoneId::parse("J10")) == 179);
    auto fig7 = fixtures::figure_grid(7);
    CHECK(fig7.at(ZoneId::parse("E5")) == 216);
    CHECK(fig7.at(ZoneId::parse("H8")) == 102);
    auto fig8 = fixtures::figure_grid(8);
    CHECK(fig8.at(ZoneId::parse("B5")) == 24);
    CHECK(fig8.at(ZoneId::parse("C10")) == 232);
    CHECK(fixtures::figure_grid(9).at(ZoneId::parse("A1")) == 175);
    CHECK_THROWS_AS(fixtures::figure_csv(3), Error);
}

TEST_CASE("bundled fixtures match the data directory") {
    for (int f = 4; f <= 9; ++f) {
        CHECK(fixtures::figure_csv(f) == read_fixture("figure" + std::to_string(f) + ".csv"));
    }
    CHECK(fixtures::scenario1_multipliers_csv() == read_fixture("scenario1_multipliers.csv"));
    CHECK(fixtures::calibrated_field_csv() == read_fixture("calibrated_field.csv"));
    CHECK(fixtures::calibrated_field_csv() == write_field_csv(generate_field(fixtures::kCalibratedSeed, 10, 10)));
}

TEST_CASE("figure sums are pinned and within rounding of the stated totals") {
    const std::map<int, double> pinned{{4, 11094}, {5, 15244}, {6, 11049}, {7, 12696}, {8, 11109}, {9, 15061}};
    auto checks = fixtures::fixture_checksums();
    REQUIRE(checks.size() == 6);
    for (const auto& c : checks) {
        CAPTURE(c.figure);
        CHECK(c.sum == pinned.at(c.figure));
        CHECK(c.sum == grid_sum(fixtures::figure_grid(c.figure)));
        CHECK(std::abs(c.sum - c.stated_total) <= fixtures::kChecksumTolerance);
    }
}

TEST_CASE("grid CSV writes canonical text that reads back exactly") {
    CHECK(write_grid_csv(read_grid_csv(",A\n1,0\n")) == ",A\n1,0\n");
    auto one = read_grid_csv(",A\n1,0\n");
    CHECK(one.rows() == 1);
    CHECK(one[0] == 0.0);
    for (int f = 4; f <= 9; ++f) {
        auto text = std::string(fixtures::figure_csv(f));
        CHECK(write_grid_csv(read_grid_csv(text)) == text);
    }
    auto text = std::string(fixtures::scenario1_multipliers_csv());
    CHECK(write_grid_csv(read_grid_csv(text)) == text);

    ValueGrid g(2, 2, 0.1);
    g[1] = 1.0 / 3.0;
    g[3] = 1e-300;
    CHECK(read_grid_csv(write_grid_csv(g)) == g);
    CHECK(write_grid_csv(g, 1) == ",A,B\n1,0.1,0.3\n2,0.1,0.0\n");
}

TEST_CASE("grid CSV errors") {
    CHECK_THROWS_AS(read_grid_csv(""), Error);
    CHECK_THROWS_AS(read_grid_csv("1,2,3\n"), Error);
    CHECK_THROWS_AS(read_grid_csv(",A,B\n1,1\n"), Error);
    CHECK_THROWS_AS(read_grid_csv(",A,B\n1,1,2,3\n"), Error);
    CHECK_THROWS_AS(read_grid_csv(",A,B\n1,1,x\n"), Error);
    CHECK_THROWS_AS(read_grid_csv(",A,B\n2,1,2\n"), Error);
    CHECK_THROWS_AS(read_grid_csv(",A,C\n1,1,2\n"), Error);
    CHECK_THROWS_AS(read_field_csv(",A\n1,1|2|3\n"), Error);
    CHECK_THROWS_AS(read_text_file("/nonexistent/agrisim.csv"), Error);
}

TEST_CASE("format_number") {
    CHECK(format_number(110.0) == "110");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(110.25, 1) == "110.3");
    CHECK(format_number(-0.0, 1) == "0.0");
    CHECK(format_number(2.5, 0) == "3");
}

TEST_CASE("digest is 64-bit FNV-1a") {
    CHECK(digest_hex("") == "cbf29ce484222325");
    CHECK(digest_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("run config parsing") {
    auto dir = test_support::data_dir() / "examples";
    auto cfg = load_run_config(dir / "stealth_run.yaml");
    CHECK(cfg.field.kind == FieldSource::Kind::seed);
    CHECK(cfg.field.seed == 42);
    CHECK(cfg.econ == EconParams{});
    REQUIRE(cfg.scenarios.size() == 2);
    CHECK(cfg.scenarios[0].kind == ScenarioRef::Kind::file);
    CHECK(cfg.scenarios[0].path == dir / "starve_west.yaml");
    CHECK(cfg.scenarios[1].kind == ScenarioRef::Kind::inline_document);
    REQUIRE(cfg.optimizer);
    CHECK(cfg.optimizer->stealth_budget == 50.0);

    auto west = resolve_scenario(cfg.scenarios[0], 10, 10);
    CHECK(west.spoof_display);
    CHECK(west.multipliers.at(ZoneId::parse("A1")) == 0.45);
    CHECK(west.multipliers.at(ZoneId::parse("C5")) == 1.0);
    CHECK(west.multipliers.at(ZoneId::parse("F1")) == 1.0);

    auto calibrated = load_run_config(dir / "calibrated_run.yaml");
    CHECK(calibrated.field.kind == FieldSource::Kind::calibrated);
    REQUIRE(calibrated.scenarios.size() == 4);
    CHECK(calibrated.scenarios[3].kind == ScenarioRef::Kind::plotted_scenario2);
    CHECK_FALSE(calibrated.optimizer->stealth_budget);
}

TEST_CASE("run config errors") {
    auto bad = [](const std::string& text) { CHECK_THROWS_AS(parse_run_config(text, "."), Error); };
    bad("format_version: 2\n");
    bad("format_version: 1\nfield: {seed: 1, path: a.csv}\n");
    bad("format_version: 1\ncolour: red\n");
    bad("format_version: 1\neconomics: {corn_price: -1}\n");
    bad("format_version: 1\nsplit: {at_planting: 0.3, in_season: 0.3}\n");
    bad("format_version: 1\noptimizer: {multiplier_set: [0, 0.5]}\n");
    bad("format_version: 1\nscenarios: [{name: x, rules: [{zones: A1, multiplier: -2}]}]\n");
    bad("format_version: 1\nscenarios: [{name: x, rules: [{zones: 'A1-B2', multiplier: 2}]}]\n");
    bad("format_version: 1\nfield: [1, 2\n");
    bad("format_version: 1\nfield: {bundled: other}\n");
    CHECK_NOTHROW(parse_run_config("format_version: 1\n", "."));
}

TEST_CASE("scenario references") {
    CHECK(parse_scenario_ref("2").kind == ScenarioRef::Kind::builtin);
    CHECK(parse_scenario_ref("2").builtin_id == 2);
    CHECK(parse_scenario_ref("identity").kind == ScenarioRef::Kind::identity);
    CHECK(parse_scenario_ref("2-plotted").kind == ScenarioRef::Kind::plotted_scenario2);
    CHECK(parse_scenario_ref("x.yaml").kind == ScenarioRef::Kind::file);
    CHECK_THROWS_AS(parse_scenario_ref(""), Error);
    CHECK_THROWS_AS(resolve_scenario(parse_scenario_ref("/nonexistent.yaml"), 10, 10), Error);
}

TEST_CASE("scenario document with a grid file") {
    auto dir = test_support::scratch_dir("scenario_grid");
    write_text_file(dir / "m.csv", ",A,B\n1,0.5,2\n");
    write_text_file(dir / "s.yaml", "format_version: 1\nname: g\ngrid: m.csv\n");
    auto s = load_scenario_file(dir / "s.yaml", 1, 2);
    CHECK(s.name == "g");
    CHECK(s.multipliers[0] == 0.5);
    CHECK(s.multipliers[1] == 2.0);
    CHECK_THROWS_AS(load_scenario_file(dir / "s.yaml", 2, 2), Error);
    write_text_file(dir / "both.yaml", "format_version: 1\ngrid: m.csv\nrules: []\n");
    CHECK_THROWS_AS(load_scenario_file(dir / "both.yaml", 1, 2), Error);
}

TEST_CASE("canonical config ignores the output directory and tracks content") {
    auto a = calibrated_config();
    auto b = a;
    b.output_dir = "elsewhere";
    CHECK(canonical_config(a) == canonical_config(b));
    b.econ.corn_price = 5.0;
    CHECK(canonical_config(a) != canonical_config(b));
    auto j = nlohmann::json::parse(canonical_config(a));
    CHECK(j["format_version"] == 1);
}

TEST_CASE("control-only report has a single zero-loss row") {
    RunConfig cfg;
    cfg.field.kind = FieldSource::Kind::seed;
    cfg.field.seed = 42;
    auto field = resolve_field(cfg.field);
    auto doc = build_report(evaluate_run(cfg, field));
    REQUIRE(doc.summary.size() == 1);
    CHECK(doc.summary[0].kind == "control");
    CHECK(doc.summary[0].loss == 0.0);
    CHECK(doc.json["summary"][0]["loss"] == 0.0);
    CHECK(doc.json["metadata"]["seed"] == 42);
    CHECK(format_summary_table(doc.summary).find("0.00") != std::string::npos);
}

TEST_CASE("report on the calibrated field") {
    auto cfg = calibrated_config();
    cfg.optimizer = OptimizerConfig{};
    cfg.optimizer->multiplier_set = {0.0, 0.25, 0.45, 0.5, 1.0, 1.5, 2.0, 2.8};
    auto field = resolve_field(cfg.field);
    auto results = evaluate_run(cfg, field);
    auto doc = build_report(results);
    REQUIRE(doc.summary.size() == 5);
    CHECK(doc.summary[0].scenario == "control");
    CHECK(doc.summary[1].scenario == "scenario-1");
    CHECK(doc.summary[3].scenario == "scenario-3");
    CHECK(doc.summary[4].kind == "optimized");
    for (int i = 1; i <= 3; ++i) CHECK(doc.summary[4].loss >= doc.summary[i].loss);

    // Recompute each loss from the per-zone grids in the JSON.
    const auto& j = doc.json;
    double corn = j["economics"]["corn_price"], nprice = j["economics"]["nitrogen_price"];
    double exp_yield = 0.0, exp_n = 0.0;
    for (const auto& row : j["control"]["grids"]["expected_yield"]) for (double v : row) exp_yield += v;
    for (const auto& row : j["control"]["grids"]["prescribed_n"]) for (double v : row) exp_n += v;
    for (std::size_t i = 0; i < j["scenarios"].size(); ++i) {
        const auto& s = j["scenarios"][i];
        double yield = 0.0, n = 0.0;
        for (const auto& row : s["grids"]["yield"]) for (double v : row) yield += v;
        for (const auto& row : s["grids"]["applied_n"]) for (double v : row) n += v;
        double loss = (exp_yield * corn - exp_n * nprice) - (yield * corn - n * nprice);
        CHECK(std::abs(loss - j["summary"][i + 1]["loss"].get<double>()) <= 0.01);
    }
}

TEST_CASE("emit_report writes identical bytes on repeat runs") {
    auto cfg = calibrated_config();
    cfg.optimizer = OptimizerConfig{};
    cfg.optimizer->stealth_budget = 50.0;
    auto field = resolve_field(cfg.field);
    auto a = test_support::scratch_dir("report_a");
    auto b = test_support::scratch_dir("report_b");
    run_report(cfg, field, a);
    run_report(cfg, field, b);
    auto da = read_dir(a), db = read_dir(b);
    CHECK(da.size() > 10);
    CHECK(da == db);
    CHECK(da.count("report.json") == 1);
    CHECK(da.count("scenario-2_zone_loss.csv") == 1);
}

TEST_CASE("emit_report fails on an unwritable destination") {
    auto dir = test_support::scratch_dir("unwritable");
    write_text_file(dir / "blocker", "x");
    RunConfig cfg;
    cfg.field.kind = FieldSource::Kind::seed;
    cfg.field.seed = 1;
    auto field = resolve_field(cfg.field);
    auto doc = build_report(evaluate_run(cfg, field));
    CHECK_THROWS_AS(emit_report(doc, dir / "blocker" / "out"), Error);
}

TEST_CASE("pipeline stages write their files") {
    RunConfig cfg;
    cfg.field.kind = FieldSource::Kind::seed;
    cfg.field.seed = 42;
    auto field = resolve_field(cfg.field);
    auto dir = test_support::scratch_dir("pipeline");
    run_gen_field(field, dir);
    CHECK(read_field_csv(read_text_file(dir / "field.csv")) == field);

    auto p = run_prescribe(cfg, field, dir);
    CHECK(read_grid_csv(read_text_file(dir / "prescribed_n.csv")) == p.n_rec_grid());

    auto pass = run_attack(cfg, field, builtin_scenario(3), dir);
    auto applied = read_grid_csv(read_text_file(dir / "applied_n.csv"));
    CHECK(applied == pass.applied_total);
    auto stealth = nlohmann::json::parse(read_text_file(dir / "stealth.json"));
    CHECK(stealth.contains("total_delta"));
    CHECK(fs::exists(dir / "pass.csv"));

    auto h = run_harvest(cfg, field, applied, dir);
    CHECK(read_grid_csv(read_text_file(dir / "yield.csv")) == h.yields);

    cfg.optimizer = OptimizerConfig{};
    auto sol = run_optimize(cfg, field, dir / "opt");
    CHECK(fs::exists(dir / "opt" / "solution.json"));
    CHECK(read_grid_csv(read_text_file(dir / "opt" / "optimized_multipliers.csv")) == sol.scenario.multipliers);
}
