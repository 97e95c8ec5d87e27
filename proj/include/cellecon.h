/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * cellecon: techno-economic modelling of 3G-HSPA vs 4G-LTE macro networks.
 *
 * Shared-library C interface. All state lives behind opaque handles; every
 * function returns a cellecon_status, with CELLECON_OK == 0 on success.
 * After a failure, cellecon_last_error() returns a thread-local description.
 * Strings produced by the library are heap-allocated and must be released
 * with cellecon_string_free().
 */

#ifndef CELLECON_H
#define CELLECON_H

#include <stddef.h>

#if defined(_WIN32)
#define CELLECON_API __declspec(dllexport)
#else
#define CELLECON_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cellecon_status {
  CELLECON_OK = 0,
  CELLECON_ERR_DOMAIN = 1,    /* invalid numeric input */
  CELLECON_ERR_CONFIG = 2,    /* bad configuration or input file */
  CELLECON_ERR_COMPUTE = 3,   /* overload, non-convergence, singular fit */
  CELLECON_ERR_ARGUMENT = 4   /* null pointer or unknown tag */
} cellecon_status;

typedef struct cellecon_config cellecon_config;
typedef struct cellecon_report cellecon_report;

/* Thread-local message for the most recent failure in this thread. */
CELLECON_API const char* cellecon_last_error(void);

CELLECON_API void cellecon_string_free(char* s);

/* --- configuration ----------------------------------------------------- */

/* Baseline scenario (no file needed). */
CELLECON_API cellecon_status cellecon_config_default(cellecon_config** out);

/* JSON scenario file; relative corpus paths resolve beside the file. */
CELLECON_API cellecon_status cellecon_config_load(const char* path,
                                                  cellecon_config** out);

CELLECON_API void cellecon_config_free(cellecon_config* cfg);

/* mode: "standard" or "paper". */
CELLECON_API cellecon_status cellecon_config_set_annuity_mode(cellecon_config* cfg,
                                                              const char* mode);

/* denominator: 1024 or 8192 (the Mbit -> GB conversion constant). */
CELLECON_API cellecon_status cellecon_config_set_kf(cellecon_config* cfg,
                                                    int denominator);

/* Configured 4G uptake increments (for iterating profit sweeps). */
CELLECON_API size_t cellecon_config_uptake_count(const cellecon_config* cfg);
CELLECON_API double cellecon_config_uptake(const cellecon_config* cfg, size_t i);

/* --- scalar computations ------------------------------------------------ */

CELLECON_API cellecon_status cellecon_shannon_capacity(double bandwidth_hz, double snr,
                                                       double* out_bps);

/* Multi-cell spectral efficiency for an inefficiency factor mu >= 1. */
CELLECON_API cellecon_status cellecon_spectral_efficiency(double mu,
                                                          double* out_bits_s_hz);

/* Fitted tariff-surface coefficients for "3g" or "4g". */
CELLECON_API cellecon_status cellecon_tariff_fit(const cellecon_config* cfg,
                                                 const char* tech,
                                                 double out_coeffs[5]);

/* Monthly charge surface evaluated at (minutes, data_mb). */
CELLECON_API cellecon_status cellecon_tariff_predict(const cellecon_config* cfg,
                                                     const char* tech, double minutes,
                                                     double data_mb, double* out_gbp);

/* --- table generators (CSV payloads) ------------------------------------ */

CELLECON_API cellecon_status cellecon_capacity_csv(const cellecon_config* cfg,
                                                   char** out_csv);

CELLECON_API cellecon_status cellecon_bw_gain_csv(const cellecon_config* cfg,
                                                  char** out_csv);

/* demands: array of Mbps/km2 values, or NULL to use the configured grid
 * (prefixed with a zero-load row). */
CELLECON_API cellecon_status cellecon_power_sweep_csv(const cellecon_config* cfg,
                                                      const char* tech,
                                                      const double* demands,
                                                      size_t n_demands,
                                                      char** out_csv);

CELLECON_API cellecon_status cellecon_opex_sweep_csv(const cellecon_config* cfg,
                                                     const char* tech,
                                                     char** out_csv);

/* cost_override_path: optional CSV (technology,demand_mbps_km2,cost_gbp)
 * substituting the annual-cost column; NULL to use the cost model. */
CELLECON_API cellecon_status cellecon_profit_sweep_csv(const cellecon_config* cfg,
                                                       double uptake_4g,
                                                       const char* cost_override_path,
                                                       char** out_csv);

/* mix_path: optional fuel-mix CSV (fuel,share,g_per_kwh); NULL for the
 * configured mix. A negative demand selects the top of the configured grid. */
CELLECON_API cellecon_status cellecon_emissions_csv(const cellecon_config* cfg,
                                                    const char* tech, double demand,
                                                    const char* mix_path,
                                                    char** out_csv);

/* --- full report bundle -------------------------------------------------- */

/* Every table over the configured grids plus summary.md; byte-deterministic
 * for a fixed configuration. */
CELLECON_API cellecon_status cellecon_report_run(const cellecon_config* cfg,
                                                 cellecon_report** out);

CELLECON_API size_t cellecon_report_file_count(const cellecon_report* report);

/* Borrowed pointers, valid until cellecon_report_free. NULL if i is out of
 * range. */
CELLECON_API const char* cellecon_report_file_name(const cellecon_report* report,
                                                   size_t i);
CELLECON_API const char* cellecon_report_file_content(const cellecon_report* report,
                                                      size_t i);

CELLECON_API void cellecon_report_free(cellecon_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CELLECON_H */
