#include "agrisim/agrisim.h"

#include "agrisim/config.hpp"
#include "agrisim/error.hpp"
#include "agrisim/fixtures.hpp"
#include "agrisim/grid_csv.hpp"
#include "agrisim/paper_check.hpp"
#include "agrisim/pipeline.hpp"
#include "agrisim/version.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct agrisim_config {
    agrisim::RunConfig config;
    std::string output_dir;
};

struct agrisim_field {
    agrisim::FieldGrid field;
};

struct agrisim_scenario {
    agrisim::AttackScenario scenario;
};

namespace {

thread_local std::string g_last_error;

class UsageError : public agrisim::Error {
public:
    explicit UsageError(const std::string& msg) : agrisim::Error(agrisim::ErrorKind::usage, msg) {}
};

template <typename T>
T& deref(T* p, const char* name) {
    if (p == nullptr) throw UsageError(std::string(name) + " must not be NULL");
    return *p;
}

const char* str(const char* s, const char* name) {
    if (s == nullptr) throw UsageError(std::string(name) + " must not be NULL");
    return s;
}

template <typename F>
agrisim_status guarded(F&& f) noexcept {
    try {
        g_last_error.clear();
        f();
        return AGRISIM_OK;
    } catch (const agrisim::Error& e) {
        g_last_error = e.what();
        return static_cast<agrisim_status>(static_cast<int>(e.kind()));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return AGRISIM_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return AGRISIM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown internal error";
        return AGRISIM_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

agrisim::Zone to_zone(const agrisim_zone& z) {
    agrisim::Zone out;
    out.yield_goal = z.yield_goal;
    out.soil_nitrate = z.soil_nitrate;
    out.organic_matter = z.organic_matter;
    out.n_credits = z.n_credits;
    return out;
}

void fill_ledger(const agrisim::Ledger& l, agrisim_ledger& out) {
    out.expected_yield_total = l.expected_yield_total;
    out.actual_yield_total = l.actual_yield_total;
    out.expected_n_total = l.expected_n_total;
    out.actual_n_total = l.actual_n_total;
    out.expected_revenue = l.expected_revenue;
    out.expected_cost = l.expected_cost;
    out.expected_profit = l.expected_profit;
    out.actual_revenue = l.actual_revenue;
    out.actual_cost = l.actual_cost;
    out.actual_profit = l.actual_profit;
    out.profit_loss_gain = l.profit_loss_gain;
}

} // namespace

extern "C" {

const char* agrisim_version(void) { return agrisim::kToolVersion; }

const char* agrisim_last_error(void) { return g_last_error.c_str(); }

void agrisim_string_free(char* s) { std::free(s); }

agrisim_status agrisim_price_adjustment(double corn_price, double nitrogen_price, double* out) {
    return guarded([&] { deref(out, "out") = agrisim::price_adjustment(corn_price, nitrogen_price); });
}

agrisim_status agrisim_recommend_nitrogen(const agrisim_zone* zone, double price_adj, double timing_adj,
                                          double* out) {
    return guarded([&] {
        deref(out, "out") = agrisim::recommend_nitrogen(to_zone(deref(zone, "zone")), price_adj, timing_adj);
    });
}

agrisim_status agrisim_yield_from_rate(double n_rate, const agrisim_zone* zone, double floor, double boost,
                                       double price_adj, double timing_adj, double* out) {
    return guarded([&] {
        const agrisim::YieldBounds bounds{floor, boost};
        bounds.validate();
        deref(out, "out") = agrisim::yield_from_rate(n_rate, to_zone(deref(zone, "zone")), bounds,
                                                     price_adj, timing_adj);
    });
}

agrisim_status agrisim_compile_ledger(double expected_yield, double expected_n, double actual_yield,
                                      double actual_n, double corn_price, double nitrogen_price,
                                      agrisim_ledger* out) {
    return guarded([&] {
        fill_ledger(agrisim::compile_ledger({expected_yield, expected_n}, {actual_yield, actual_n},
                                            corn_price, nitrogen_price),
                    deref(out, "out"));
    });
}

agrisim_status agrisim_config_default(agrisim_config** out) {
    return guarded([&] {
        auto* c = new agrisim_config{};
        c->output_dir = c->config.output_dir.string();
        deref(out, "out") = c;
    });
}

agrisim_status agrisim_config_load(const char* path, agrisim_config** out) {
    return guarded([&] {
        auto& slot = deref(out, "out");
        auto* c = new agrisim_config{agrisim::load_run_config(str(path, "path")), {}};
        c->output_dir = c->config.output_dir.string();
        slot = c;
    });
}

agrisim_status agrisim_config_set_seed(agrisim_config* config, uint64_t seed) {
    return guarded([&] {
        auto& src = deref(config, "config").config.field;
        if (src.kind != agrisim::FieldSource::Kind::seed) {
            src = agrisim::FieldSource{};
            src.kind = agrisim::FieldSource::Kind::seed;
        }
        src.seed = seed;
    });
}

agrisim_status agrisim_config_set_output_dir(agrisim_config* config, const char* dir) {
    return guarded([&] {
        auto& c = deref(config, "config");
        c.config.output_dir = str(dir, "dir");
        c.output_dir = c.config.output_dir.string();
    });
}

const char* agrisim_config_output_dir(const agrisim_config* config) {
    return config == nullptr ? "" : config->output_dir.c_str();
}

void agrisim_config_free(agrisim_config* config) { delete config; }

agrisim_status agrisim_field_generate(uint64_t seed, size_t rows, size_t cols, agrisim_field** out) {
    return guarded([&] {
        auto& slot = deref(out, "out");
        slot = new agrisim_field{agrisim::generate_field(seed, rows, cols)};
    });
}

agrisim_status agrisim_field_from_config(const agrisim_config* config, agrisim_field** out) {
    return guarded([&] {
        auto& slot = deref(out, "out");
        slot = new agrisim_field{agrisim::resolve_field(deref(config, "config").config.field)};
    });
}

agrisim_status agrisim_field_load(const char* csv_path, agrisim_field** out) {
    return guarded([&] {
        auto& slot = deref(out, "out");
        slot = new agrisim_field{agrisim::read_field_csv(agrisim::read_text_file(str(csv_path, "csv_path")))};
    });
}

agrisim_status agrisim_field_calibrated(agrisim_field** out) {
    return guarded([&] {
        auto& slot = deref(out, "out");
        slot = new agrisim_field{agrisim::fixtures::calibrated_field()};
    });
}

agrisim_status agrisim_field_save(const agrisim_field* field, const char* csv_path) {
    return guarded([&] {
        agrisim::write_text_file(str(csv_path, "csv_path"),
                                 agrisim::write_field_csv(deref(field, "field").field));
    });
}

size_t agrisim_field_rows(const agrisim_field* field) { return field ? field->field.rows() : 0; }

size_t agrisim_field_cols(const agrisim_field* field) { return field ? field->field.cols() : 0; }

agrisim_status agrisim_field_zone(const agrisim_field* field, size_t index, agrisim_zone* out) {
    return guarded([&] {
        const auto& f = deref(field, "field").field;
        if (index >= f.size()) throw UsageError("zone index out of range");
        const auto& z = f.zone(index);
        deref(out, "out") = agrisim_zone{z.yield_goal, z.soil_nitrate, z.organic_matter, z.n_credits};
    });
}

agrisim_status agrisim_field_validate(const agrisim_field* field, size_t* violations) {
    return guarded([&] {
        deref(violations, "violations") = agrisim::validate_field(deref(field, "field").field).size();
    });
}

void agrisim_field_free(agrisim_field* field) { delete field; }

agrisim_status agrisim_scenario_resolve(const char* ref, size_t rows, size_t cols, agrisim_scenario** out) {
    return guarded([&] {
        auto& slot = deref(out, "out");
        const auto r = agrisim::parse_scenario_ref(str(ref, "ref"));
        if (r.kind == agrisim::ScenarioRef::Kind::file && !std::filesystem::exists(r.path)) {
            throw agrisim::Error(agrisim::ErrorKind::data,
                                 "scenario '" + r.path.string() +
                                     "' is neither a builtin (1, 2, 3, identity, 2-plotted) nor an existing file");
        }
        slot = new agrisim_scenario{agrisim::resolve_scenario(r, rows, cols)};
    });
}

agrisim_status agrisim_scenario_multiplier(const agrisim_scenario* scenario, const char* zone, double* out) {
    return guarded([&] {
        deref(out, "out") =
            deref(scenario, "scenario").scenario.multipliers.at(agrisim::ZoneId::parse(str(zone, "zone")));
    });
}

void agrisim_scenario_free(agrisim_scenario* scenario) { delete scenario; }

agrisim_status agrisim_run_gen_field(const agrisim_field* field, const char* out_dir) {
    return guarded([&] { agrisim::run_gen_field(deref(field, "field").field, str(out_dir, "out_dir")); });
}

agrisim_status agrisim_run_prescribe(const agrisim_config* config, const agrisim_field* field,
                                     const char* out_dir, agrisim_prescription_totals* out) {
    return guarded([&] {
        const auto p = agrisim::run_prescribe(deref(config, "config").config, deref(field, "field").field,
                                              str(out_dir, "out_dir"));
        if (out) *out = agrisim_prescription_totals{p.planting_total(), p.inseason_total(), p.total()};
    });
}

agrisim_status agrisim_run_attack(const agrisim_config* config, const agrisim_field* field,
                                  const agrisim_scenario* scenario, const char* out_dir, agrisim_stealth* out) {
    return guarded([&] {
        const auto pass = agrisim::run_attack(deref(config, "config").config, deref(field, "field").field,
                                              deref(scenario, "scenario").scenario, str(out_dir, "out_dir"));
        if (out) {
            *out = agrisim_stealth{pass.stealth.total_delta, pass.stealth.max_zone_deviation,
                                   pass.stealth.visible_delta};
        }
    });
}

agrisim_status agrisim_run_harvest(const agrisim_config* config, const agrisim_field* field,
                                   const char* applied_csv_path, const char* out_dir, double* total_yield) {
    return guarded([&] {
        const auto applied =
            agrisim::read_grid_csv(agrisim::read_text_file(str(applied_csv_path, "applied_csv_path")));
        const auto h = agrisim::run_harvest(deref(config, "config").config, deref(field, "field").field,
                                            applied, str(out_dir, "out_dir"));
        if (total_yield) *total_yield = h.total;
    });
}

agrisim_status agrisim_run_report(const agrisim_config* config, const agrisim_field* field,
                                  const char* out_dir, char** summary) {
    return guarded([&] {
        const auto doc = agrisim::run_report(deref(config, "config").config, deref(field, "field").field,
                                             str(out_dir, "out_dir"));
        if (summary) *summary = dup_string(agrisim::format_summary_table(doc.summary));
    });
}

agrisim_status agrisim_run_optimize(const agrisim_config* config, const agrisim_field* field,
                                    const char* out_dir, agrisim_solution* out) {
    return guarded([&] {
        const auto sol = agrisim::run_optimize(deref(config, "config").config, deref(field, "field").field,
                                               str(out_dir, "out_dir"));
        if (out) {
            *out = agrisim_solution{sol.loss, sol.net_fertilizer_delta,
                                    sol.optimality == agrisim::Optimality::exact ? 1 : 0, sol.within_budget ? 1 : 0};
        }
    });
}

agrisim_status agrisim_reproduce_paper(char** table, int* passed) {
    return guarded([&] {
        const auto rep = agrisim::reproduce_paper();
        if (table) *table = dup_string(agrisim::format_paper_table(rep));
        deref(passed, "passed") = rep.gating_passed ? 1 : 0;
    });
}

agrisim_status agrisim_calibrate(uint64_t first_seed, uint64_t last_seed, uint64_t* seed, double* yield_total,
                                 double* n_total) {
    return guarded([&] {
        if (first_seed > last_seed) throw UsageError("first seed must not exceed last seed");
        const auto r = agrisim::calibrate_field_seed(first_seed, last_seed);
        if (!(r.score < 1e300)) {
            throw agrisim::Error(agrisim::ErrorKind::data, "no seed in range meets the calibration constraints");
        }
        deref(seed, "seed") = r.seed;
        if (yield_total) *yield_total = r.yield_total;
        if (n_total) *n_total = r.n_total;
    });
}

} // extern "C"
