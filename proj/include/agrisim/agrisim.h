/* C interface to the agrisim simulator.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns an agrisim_status; on failure agrisim_last_error()
 * holds a one-line message for the calling thread until its next call.
 * Status values match the CLI exit codes.
 */
#ifndef AGRISIM_H
#define AGRISIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef AGRISIM_BUILDING_LIBRARY
#    define AGRISIM_API __declspec(dllexport)
#  else
#    define AGRISIM_API __declspec(dllimport)
#  endif
#else
#  define AGRISIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum agrisim_status {
    AGRISIM_OK = 0,
    AGRISIM_ERR_USAGE = 1,
    AGRISIM_ERR_DATA = 2,
    AGRISIM_ERR_INTERNAL = 3
} agrisim_status;

typedef struct agrisim_config agrisim_config;
typedef struct agrisim_field agrisim_field;
typedef struct agrisim_scenario agrisim_scenario;

typedef struct agrisim_zone {
    double yield_goal;
    double soil_nitrate;
    double organic_matter;
    double n_credits;
} agrisim_zone;

typedef struct agrisim_prescription_totals {
    double planting;
    double inseason;
    double total;
} agrisim_prescription_totals;

typedef struct agrisim_stealth {
    double total_delta;
    double max_zone_deviation;
    double visible_delta;
} agrisim_stealth;

typedef struct agrisim_ledger {
    double expected_yield_total;
    double actual_yield_total;
    double expected_n_total;
    double actual_n_total;
    double expected_revenue;
    double expected_cost;
    double expected_profit;
    double actual_revenue;
    double actual_cost;
    double actual_profit;
    double profit_loss_gain;
} agrisim_ledger;

typedef struct agrisim_solution {
    double loss;
    double net_fertilizer_delta;
    int exact;         /* 1 when optimal for the discretized problem */
    int within_budget; /* 0 when the undiscretized net delta exceeds the budget */
} agrisim_solution;

AGRISIM_API const char* agrisim_version(void);
AGRISIM_API const char* agrisim_last_error(void);
AGRISIM_API void agrisim_string_free(char* s);

/* Scalar model functions. */
AGRISIM_API agrisim_status agrisim_price_adjustment(double corn_price, double nitrogen_price, double* out);
AGRISIM_API agrisim_status agrisim_recommend_nitrogen(const agrisim_zone* zone, double price_adj,
                                                      double timing_adj, double* out);
AGRISIM_API agrisim_status agrisim_yield_from_rate(double n_rate, const agrisim_zone* zone,
                                                   double floor, double boost, double price_adj,
                                                   double timing_adj, double* out);
AGRISIM_API agrisim_status agrisim_compile_ledger(double expected_yield, double expected_n,
                                                  double actual_yield, double actual_n,
                                                  double corn_price, double nitrogen_price,
                                                  agrisim_ledger* out);

/* Run configuration. */
AGRISIM_API agrisim_status agrisim_config_default(agrisim_config** out);
AGRISIM_API agrisim_status agrisim_config_load(const char* path, agrisim_config** out);
/* Replaces the field source with a seeded rows x cols default-range field. */
AGRISIM_API agrisim_status agrisim_config_set_seed(agrisim_config* config, uint64_t seed);
AGRISIM_API agrisim_status agrisim_config_set_output_dir(agrisim_config* config, const char* dir);
/* Output directory; owned by the config. */
AGRISIM_API const char* agrisim_config_output_dir(const agrisim_config* config);
AGRISIM_API void agrisim_config_free(agrisim_config* config);

/* Fields. */
AGRISIM_API agrisim_status agrisim_field_generate(uint64_t seed, size_t rows, size_t cols,
                                                  agrisim_field** out);
AGRISIM_API agrisim_status agrisim_field_from_config(const agrisim_config* config, agrisim_field** out);
AGRISIM_API agrisim_status agrisim_field_load(const char* csv_path, agrisim_field** out);
AGRISIM_API agrisim_status agrisim_field_calibrated(agrisim_field** out);
AGRISIM_API agrisim_status agrisim_field_save(const agrisim_field* field, const char* csv_path);
AGRISIM_API size_t agrisim_field_rows(const agrisim_field* field);
AGRISIM_API size_t agrisim_field_cols(const agrisim_field* field);
AGRISIM_API agrisim_status agrisim_field_zone(const agrisim_field* field, size_t index, agrisim_zone* out);
/* Number of validation violations; 0 means valid. */
AGRISIM_API agrisim_status agrisim_field_validate(const agrisim_field* field, size_t* violations);
AGRISIM_API void agrisim_field_free(agrisim_field* field);

/* Scenarios: "1", "2", "3", "identity", "2-plotted" or a scenario file path. */
AGRISIM_API agrisim_status agrisim_scenario_resolve(const char* ref, size_t rows, size_t cols,
                                                    agrisim_scenario** out);
AGRISIM_API agrisim_status agrisim_scenario_multiplier(const agrisim_scenario* scenario,
                                                       const char* zone, double* out);
AGRISIM_API void agrisim_scenario_free(agrisim_scenario* scenario);

/* Subcommand runs; each writes its files into out_dir. */
AGRISIM_API agrisim_status agrisim_run_gen_field(const agrisim_field* field, const char* out_dir);
AGRISIM_API agrisim_status agrisim_run_prescribe(const agrisim_config* config, const agrisim_field* field,
                                                 const char* out_dir, agrisim_prescription_totals* out);
AGRISIM_API agrisim_status agrisim_run_attack(const agrisim_config* config, const agrisim_field* field,
                                              const agrisim_scenario* scenario, const char* out_dir,
                                              agrisim_stealth* out);
AGRISIM_API agrisim_status agrisim_run_harvest(const agrisim_config* config, const agrisim_field* field,
                                               const char* applied_csv_path, const char* out_dir,
                                               double* total_yield);
/* Summary table text in *summary (free with agrisim_string_free); may be NULL. */
AGRISIM_API agrisim_status agrisim_run_report(const agrisim_config* config, const agrisim_field* field,
                                              const char* out_dir, char** summary);
AGRISIM_API agrisim_status agrisim_run_optimize(const agrisim_config* config, const agrisim_field* field,
                                                const char* out_dir, agrisim_solution* out);
/* Comparison table in *table; *passed is 1 when every gating check passed. */
AGRISIM_API agrisim_status agrisim_reproduce_paper(char** table, int* passed);
AGRISIM_API agrisim_status agrisim_calibrate(uint64_t first_seed, uint64_t last_seed, uint64_t* seed,
                                             double* yield_total, double* n_total);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* AGRISIM_H */
