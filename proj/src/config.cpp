#include "agrisim/config.hpp"

#include "agrisim/error.hpp"
#include "agrisim/fixtures.hpp"
#include "agrisim/grid_csv.hpp"

#include <json.hpp>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <initializer_list>

namespace fs = std::filesystem;

namespace agrisim {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw_data_error("config " + where + ": " + what);
}

void check_keys(const YAML::Node& node, const std::string& where,
                std::initializer_list<std::string_view> allowed) {
    if (!node.IsMap()) bad(where, "expected a mapping");
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            bad(where, "unknown key '" + key + "'");
        }
    }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& where) {
    if (!node.IsScalar()) bad(where, "expected a scalar value");
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        bad(where, "cannot read '" + node.Scalar() + "'");
    }
}

template <typename T>
void read_opt(const YAML::Node& parent, const char* key, const std::string& where, T& out) {
    if (const auto n = parent[key]) out = scalar<T>(n, where + "." + key);
}

ValueRange read_range(const YAML::Node& n, const std::string& where) {
    if (!n.IsSequence() || n.size() != 2) bad(where, "expected [lo, hi]");
    return ValueRange{scalar<double>(n[0], where), scalar<double>(n[1], where)};
}

fs::path resolve_path(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_absolute() ? path : base / path;
}

YAML::Node parse_yaml(std::string_view text, const std::string& what) {
    try {
        return YAML::Load(std::string(text));
    } catch (const YAML::Exception& e) {
        throw_data_error(what + " is not valid YAML: " + e.msg + " (line " +
                         std::to_string(e.mark.line + 1) + ")");
    }
}

void check_version(const YAML::Node& root, const std::string& where) {
    if (const auto v = root["format_version"]) {
        const int version = scalar<int>(v, where + ".format_version");
        if (version != kFormatVersion) {
            bad(where, "unsupported format_version " + std::to_string(version));
        }
    }
}

ScenarioDocument scenario_from_node(const YAML::Node& root, const fs::path& base_dir,
                                    const std::string& where) {
    check_keys(root, where, {"format_version", "name", "spoof_display", "grid", "rules"});
    check_version(root, where);
    ScenarioDocument doc;
    read_opt(root, "name", where, doc.name);
    read_opt(root, "spoof_display", where, doc.spoof_display);
    if (root["grid"] && root["rules"]) bad(where, "give either 'grid' or 'rules', not both");
    if (const auto g = root["grid"]) {
        const fs::path p = resolve_path(base_dir, scalar<std::string>(g, where + ".grid"));
        if (!fs::exists(p)) bad(where + ".grid", "file '" + p.string() + "' does not exist");
        doc.grid = read_grid_csv(read_text_file(p));
    }
    if (const auto rules = root["rules"]) {
        if (!rules.IsSequence()) bad(where + ".rules", "expected a list");
        for (std::size_t i = 0; i < rules.size(); ++i) {
            const std::string w = where + ".rules[" + std::to_string(i) + "]";
            check_keys(rules[i], w, {"zones", "multiplier"});
            if (!rules[i]["zones"] || !rules[i]["multiplier"]) bad(w, "needs 'zones' and 'multiplier'");
            ScenarioRule rule;
            rule.zones = ZoneRange::parse(scalar<std::string>(rules[i]["zones"], w + ".zones"));
            rule.multiplier = scalar<double>(rules[i]["multiplier"], w + ".multiplier");
            if (!(rule.multiplier >= 0.0)) bad(w, "multiplier must be >= 0");
            doc.rules.push_back(rule);
        }
    }
    return doc;
}

FieldSource field_from_node(const YAML::Node& n, const fs::path& base_dir) {
    const std::string where = "field";
    check_keys(n, where, {"seed", "rows", "cols", "ranges", "path", "bundled"});
    const int sources = (n["seed"] ? 1 : 0) + (n["path"] ? 1 : 0) + (n["bundled"] ? 1 : 0);
    if (sources != 1) bad(where, "give exactly one of 'seed', 'path' or 'bundled'");

    FieldSource src;
    if (n["seed"]) {
        src.kind = FieldSource::Kind::seed;
        src.seed = scalar<std::uint64_t>(n["seed"], where + ".seed");
        read_opt(n, "rows", where, src.rows);
        read_opt(n, "cols", where, src.cols);
        if (const auto r = n["ranges"]) {
            check_keys(r, where + ".ranges", {"yield_goal", "nitrate", "organic_matter", "n_credits"});
            if (r["yield_goal"]) src.ranges.yield_goal = read_range(r["yield_goal"], where + ".ranges.yield_goal");
            if (r["nitrate"]) src.ranges.nitrate = read_range(r["nitrate"], where + ".ranges.nitrate");
            if (r["organic_matter"]) src.ranges.organic_matter = read_range(r["organic_matter"], where + ".ranges.organic_matter");
            read_opt(r, "n_credits", where + ".ranges", src.ranges.n_credits);
        }
        src.ranges.validate();
    } else if (n["path"]) {
        if (n["rows"] || n["cols"] || n["ranges"]) bad(where, "rows/cols/ranges only apply to seeded fields");
        src.kind = FieldSource::Kind::file;
        src.path = resolve_path(base_dir, scalar<std::string>(n["path"], where + ".path"));
        if (!fs::exists(src.path)) bad(where + ".path", "file '" + src.path.string() + "' does not exist");
    } else {
        if (n["rows"] || n["cols"] || n["ranges"]) bad(where, "rows/cols/ranges only apply to seeded fields");
        const auto name = scalar<std::string>(n["bundled"], where + ".bundled");
        if (name != "calibrated") bad(where + ".bundled", "unknown bundled field '" + name + "'");
        src.kind = FieldSource::Kind::calibrated;
    }
    return src;
}

ScenarioRef scenario_ref_from_node(const YAML::Node& n, const fs::path& base_dir,
                                   const std::string& where) {
    if (n.IsMap()) {
        ScenarioRef ref;
        ref.kind = ScenarioRef::Kind::inline_document;
        ref.document = scenario_from_node(n, base_dir, where);
        return ref;
    }
    ScenarioRef ref = parse_scenario_ref(scalar<std::string>(n, where));
    if (ref.kind == ScenarioRef::Kind::file) {
        ref.path = resolve_path(base_dir, ref.path.string());
        if (!fs::exists(ref.path)) bad(where, "scenario file '" + ref.path.string() + "' does not exist");
    }
    return ref;
}

OptimizerConfig optimizer_from_node(const YAML::Node& n) {
    const std::string where = "optimizer";
    check_keys(n, where, {"multiplier_set", "stealth_budget", "budget_resolution"});
    OptimizerConfig cfg;
    if (const auto set = n["multiplier_set"]) {
        if (!set.IsSequence()) bad(where + ".multiplier_set", "expected a list");
        cfg.multiplier_set.clear();
        for (const auto& v : set) cfg.multiplier_set.push_back(scalar<double>(v, where + ".multiplier_set"));
    }
    if (const auto b = n["stealth_budget"]) {
        if (b.IsScalar() && b.Scalar() == "unbounded") {
            cfg.stealth_budget.reset();
        } else {
            cfg.stealth_budget = scalar<double>(b, where + ".stealth_budget");
        }
    }
    read_opt(n, "budget_resolution", where, cfg.budget_resolution);
    cfg.validate();
    return cfg;
}

nlohmann::ordered_json scenario_doc_json(const ScenarioDocument& d) {
    nlohmann::ordered_json j;
    j["name"] = d.name;
    j["spoof_display"] = d.spoof_display;
    if (d.grid) j["grid"] = write_grid_csv(*d.grid);
    auto rules = nlohmann::ordered_json::array();
    for (const auto& r : d.rules) {
        rules.push_back({{"zones", r.zones.first.to_string() + ":" + r.zones.last.to_string()},
                         {"multiplier", r.multiplier}});
    }
    j["rules"] = rules;
    return j;
}

} // namespace

ScenarioRef parse_scenario_ref(std::string_view text) {
    ScenarioRef ref;
    if (text == "1" || text == "2" || text == "3") {
        ref.kind = ScenarioRef::Kind::builtin;
        ref.builtin_id = text[0] - '0';
    } else if (text == "identity") {
        ref.kind = ScenarioRef::Kind::identity;
    } else if (text == "2-plotted") {
        ref.kind = ScenarioRef::Kind::plotted_scenario2;
    } else if (text.empty()) {
        throw_data_error("empty scenario reference");
    } else {
        ref.kind = ScenarioRef::Kind::file;
        ref.path = fs::path(std::string(text));
    }
    return ref;
}

void RunConfig::validate() const {
    econ.validate();
    split.validate();
    bounds.validate();
    if (field.kind == FieldSource::Kind::seed) {
        if (field.rows == 0 || field.cols == 0) throw_data_error("field rows and cols must be >= 1");
        field.ranges.validate();
    }
    if (optimizer) optimizer->validate();
}

RunConfig parse_run_config(std::string_view text, const fs::path& base_dir) {
    const YAML::Node root = parse_yaml(text, "run configuration");
    const std::string where = "root";
    if (root.IsNull()) return RunConfig{};
    check_keys(root, where, {"format_version", "field", "economics", "split", "yield_bounds",
                             "scenarios", "optimizer", "output_dir"});
    check_version(root, where);

    RunConfig cfg;
    if (const auto f = root["field"]) cfg.field = field_from_node(f, base_dir);
    if (const auto e = root["economics"]) {
        check_keys(e, "economics", {"corn_price", "nitrogen_price", "timing_adj"});
        read_opt(e, "corn_price", "economics", cfg.econ.corn_price);
        read_opt(e, "nitrogen_price", "economics", cfg.econ.nitrogen_price);
        read_opt(e, "timing_adj", "economics", cfg.econ.timing_adj);
    }
    if (const auto s = root["split"]) {
        check_keys(s, "split", {"at_planting", "in_season"});
        read_opt(s, "at_planting", "split", cfg.split.at_planting);
        if (s["in_season"]) {
            read_opt(s, "in_season", "split", cfg.split.in_season);
        } else {
            cfg.split.in_season = 1.0 - cfg.split.at_planting;
        }
    }
    if (const auto b = root["yield_bounds"]) {
        check_keys(b, "yield_bounds", {"floor", "boost"});
        read_opt(b, "floor", "yield_bounds", cfg.bounds.floor);
        read_opt(b, "boost", "yield_bounds", cfg.bounds.boost);
    }
    if (const auto list = root["scenarios"]) {
        if (!list.IsSequence()) bad("scenarios", "expected a list");
        for (std::size_t i = 0; i < list.size(); ++i) {
            cfg.scenarios.push_back(
                scenario_ref_from_node(list[i], base_dir, "scenarios[" + std::to_string(i) + "]"));
        }
    }
    if (const auto o = root["optimizer"]) cfg.optimizer = optimizer_from_node(o);
    if (const auto out = root["output_dir"]) {
        cfg.output_dir = resolve_path(base_dir, scalar<std::string>(out, "output_dir"));
    }
    cfg.validate();
    return cfg;
}

RunConfig load_run_config(const fs::path& path) {
    const std::string text = read_text_file(path);
    return parse_run_config(text, path.parent_path());
}

ScenarioDocument parse_scenario_document(std::string_view text, const fs::path& base_dir) {
    const YAML::Node root = parse_yaml(text, "scenario document");
    return scenario_from_node(root, base_dir, "scenario");
}

AttackScenario load_scenario_file(const fs::path& path, std::size_t rows, std::size_t cols) {
    ScenarioDocument doc = parse_scenario_document(read_text_file(path), path.parent_path());
    if (doc.name.empty()) doc.name = path.stem().string();
    return load_scenario(doc, rows, cols);
}

FieldGrid resolve_field(const FieldSource& source) {
    switch (source.kind) {
    case FieldSource::Kind::seed:
        return generate_field(source.seed, source.rows, source.cols, source.ranges);
    case FieldSource::Kind::file:
        return read_field_csv(read_text_file(source.path));
    case FieldSource::Kind::calibrated:
        return fixtures::calibrated_field();
    }
    throw_internal_error("unhandled field source");
}

AttackScenario resolve_scenario(const ScenarioRef& ref, std::size_t rows, std::size_t cols) {
    switch (ref.kind) {
    case ScenarioRef::Kind::builtin:
        return builtin_scenario(ref.builtin_id, rows, cols);
    case ScenarioRef::Kind::plotted_scenario2:
        return scenario2_as_plotted(rows, cols);
    case ScenarioRef::Kind::identity:
        return AttackScenario::identity(rows, cols);
    case ScenarioRef::Kind::file:
        return load_scenario_file(ref.path, rows, cols);
    case ScenarioRef::Kind::inline_document:
        return load_scenario(ref.document, rows, cols);
    }
    throw_internal_error("unhandled scenario reference");
}

std::string canonical_config(const RunConfig& c) {
    nlohmann::ordered_json j;
    j["format_version"] = kFormatVersion;
    auto& f = j["field"];
    switch (c.field.kind) {
    case FieldSource::Kind::seed:
        f["seed"] = c.field.seed;
        f["rows"] = c.field.rows;
        f["cols"] = c.field.cols;
        f["ranges"] = {{"yield_goal", {c.field.ranges.yield_goal.lo, c.field.ranges.yield_goal.hi}},
                       {"nitrate", {c.field.ranges.nitrate.lo, c.field.ranges.nitrate.hi}},
                       {"organic_matter", {c.field.ranges.organic_matter.lo, c.field.ranges.organic_matter.hi}},
                       {"n_credits", c.field.ranges.n_credits}};
        break;
    case FieldSource::Kind::file:
        // Content, not location, identifies the run.
        f["path_digest"] = digest_hex(read_text_file(c.field.path));
        break;
    case FieldSource::Kind::calibrated:
        f["bundled"] = "calibrated";
        break;
    }
    j["economics"] = {{"corn_price", c.econ.corn_price},
                      {"nitrogen_price", c.econ.nitrogen_price},
                      {"timing_adj", c.econ.timing_adj}};
    j["split"] = {{"at_planting", c.split.at_planting}, {"in_season", c.split.in_season}};
    j["yield_bounds"] = {{"floor", c.bounds.floor}, {"boost", c.bounds.boost}};
    auto scenarios = nlohmann::ordered_json::array();
    for (const auto& s : c.scenarios) {
        switch (s.kind) {
        case ScenarioRef::Kind::builtin: scenarios.push_back(s.builtin_id); break;
        case ScenarioRef::Kind::plotted_scenario2: scenarios.push_back("2-plotted"); break;
        case ScenarioRef::Kind::identity: scenarios.push_back("identity"); break;
        case ScenarioRef::Kind::file:
            scenarios.push_back({{"file_digest", digest_hex(read_text_file(s.path))}});
            break;
        case ScenarioRef::Kind::inline_document: scenarios.push_back(scenario_doc_json(s.document)); break;
        }
    }
    j["scenarios"] = scenarios;
    if (c.optimizer) {
        nlohmann::ordered_json o;
        o["multiplier_set"] = c.optimizer->multiplier_set;
        if (c.optimizer->stealth_budget) {
            o["stealth_budget"] = *c.optimizer->stealth_budget;
        } else {
            o["stealth_budget"] = "unbounded";
        }
        o["budget_resolution"] = c.optimizer->budget_resolution;
        j["optimizer"] = o;
    } else {
        j["optimizer"] = nullptr;
    }
    return j.dump();
}

} // namespace agrisim
