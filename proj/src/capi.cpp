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

#include "cellecon.h"

#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "core/config.hpp"
#include "core/report.hpp"
#include "core/spectral.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

/// Runs the C++ body and maps its exception taxonomy onto status codes.
template <typename Fn>
cellecon_status guarded(Fn&& fn) {
  try {
    fn();
    return CELLECON_OK;
  } catch (const cellecon::config_error& e) {
    set_error(e.what());
    return CELLECON_ERR_CONFIG;
  } catch (const cellecon::parse_error& e) {
    set_error(e.what());
    return CELLECON_ERR_CONFIG;
  } catch (const cellecon::domain_error& e) {
    set_error(e.what());
    return CELLECON_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return CELLECON_ERR_COMPUTE;
  } catch (const std::exception& e) {  // overload, quadrature, singular fit, ...
    set_error(e.what());
    return CELLECON_ERR_COMPUTE;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cellecon_status parse_tech(const char* text, cellecon::Technology& out) {
  if (text == nullptr) {
    set_error("technology tag is null (expected \"3g\" or \"4g\")");
    return CELLECON_ERR_ARGUMENT;
  }
  const std::string t(text);
  if (t == "3g" || t == "3G") {
    out = cellecon::Technology::hspa_3g;
    return CELLECON_OK;
  }
  if (t == "4g" || t == "4G") {
    out = cellecon::Technology::lte_4g;
    return CELLECON_OK;
  }
  set_error("unknown technology tag '" + t + "' (expected \"3g\" or \"4g\")");
  return CELLECON_ERR_ARGUMENT;
}

}  // namespace

struct cellecon_config {
  cellecon::ScenarioConfig cfg;
};

struct cellecon_report {
  cellecon::ReportBundle bundle;
};

extern "C" {

const char* cellecon_last_error(void) { return g_last_error.c_str(); }

void cellecon_string_free(char* s) { delete[] s; }

cellecon_status cellecon_config_default(cellecon_config** out) {
  if (!out) {
    set_error("output pointer is null");
    return CELLECON_ERR_ARGUMENT;
  }
  return guarded([&] { *out = new cellecon_config{cellecon::default_config()}; });
}

cellecon_status cellecon_config_load(const char* path, cellecon_config** out) {
  if (!out || !path) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  return guarded(
      [&] { *out = new cellecon_config{cellecon::load_config_file(path)}; });
}

void cellecon_config_free(cellecon_config* cfg) { delete cfg; }

cellecon_status cellecon_config_set_annuity_mode(cellecon_config* cfg,
                                                 const char* mode) {
  if (!cfg || !mode) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  const std::string m(mode);
  if (m == "standard") {
    cfg->cfg.annuity_mode = cellecon::AnnuityMode::standard;
    return CELLECON_OK;
  }
  if (m == "paper" || m == "paper_appendix") {
    cfg->cfg.annuity_mode = cellecon::AnnuityMode::paper_appendix;
    return CELLECON_OK;
  }
  set_error("unknown annuity mode '" + m + "' (expected \"standard\" or \"paper\")");
  return CELLECON_ERR_CONFIG;
}

cellecon_status cellecon_config_set_kf(cellecon_config* cfg, int denominator) {
  if (!cfg) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  if (denominator != 1024 && denominator != 8192) {
    set_error("kf denominator must be 1024 or 8192");
    return CELLECON_ERR_CONFIG;
  }
  cfg->cfg.usage.k_f = 1.0 / denominator;
  return CELLECON_OK;
}

size_t cellecon_config_uptake_count(const cellecon_config* cfg) {
  return cfg ? cfg->cfg.uptake_fractions_4g.size() : 0;
}

double cellecon_config_uptake(const cellecon_config* cfg, size_t i) {
  if (!cfg || i >= cfg->cfg.uptake_fractions_4g.size()) return -1.0;
  return cfg->cfg.uptake_fractions_4g[i];
}

cellecon_status cellecon_shannon_capacity(double bandwidth_hz, double snr,
                                          double* out_bps) {
  if (!out_bps) {
    set_error("output pointer is null");
    return CELLECON_ERR_ARGUMENT;
  }
  return guarded(
      [&] { *out_bps = cellecon::shannon_capacity_bps(bandwidth_hz, snr); });
}

cellecon_status cellecon_spectral_efficiency(double mu, double* out_bits_s_hz) {
  if (!out_bits_s_hz) {
    set_error("output pointer is null");
    return CELLECON_ERR_ARGUMENT;
  }
  return guarded([&] {
    *out_bits_s_hz = cellecon::spectral_efficiency(cellecon::SinrInefficiency{mu},
                                                   cellecon::QuadratureConfig{})
                         .value;
  });
}

cellecon_status cellecon_tariff_fit(const cellecon_config* cfg, const char* tech,
                                    double out_coeffs[5]) {
  if (!cfg || !out_coeffs) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  cellecon::Technology t;
  if (const auto rc = parse_tech(tech, t); rc != CELLECON_OK) return rc;
  return guarded([&] {
    const auto coeffs = cellecon::fit_tariffs(cfg->cfg, t);
    for (int i = 0; i < 5; ++i) out_coeffs[i] = coeffs.b[i];
  });
}

cellecon_status cellecon_tariff_predict(const cellecon_config* cfg, const char* tech,
                                        double minutes, double data_mb,
                                        double* out_gbp) {
  if (!cfg || !out_gbp) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  cellecon::Technology t;
  if (const auto rc = parse_tech(tech, t); rc != CELLECON_OK) return rc;
  return guarded([&] {
    const auto coeffs = cellecon::fit_tariffs(cfg->cfg, t);
    *out_gbp = cellecon::predict(coeffs, minutes, data_mb);
  });
}

cellecon_status cellecon_capacity_csv(const cellecon_config* cfg, char** out_csv) {
  if (!cfg || !out_csv) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  return guarded([&] { *out_csv = copy_string(cellecon::capacity_csv(cfg->cfg)); });
}

cellecon_status cellecon_bw_gain_csv(const cellecon_config* cfg, char** out_csv) {
  if (!cfg || !out_csv) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  return guarded([&] { *out_csv = copy_string(cellecon::bw_gain_csv(cfg->cfg)); });
}

cellecon_status cellecon_power_sweep_csv(const cellecon_config* cfg, const char* tech,
                                         const double* demands, size_t n_demands,
                                         char** out_csv) {
  if (!cfg || !out_csv || (demands == nullptr && n_demands > 0)) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  cellecon::Technology t;
  if (const auto rc = parse_tech(tech, t); rc != CELLECON_OK) return rc;
  return guarded([&] {
    const std::vector<double> grid =
        demands ? std::vector<double>(demands, demands + n_demands)
                : cfg->cfg.power_grid_mbps();
    *out_csv = copy_string(cellecon::power_sweep_csv(cfg->cfg, t, grid));
  });
}

cellecon_status cellecon_opex_sweep_csv(const cellecon_config* cfg, const char* tech,
                                        char** out_csv) {
  if (!cfg || !out_csv) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  cellecon::Technology t;
  if (const auto rc = parse_tech(tech, t); rc != CELLECON_OK) return rc;
  return guarded(
      [&] { *out_csv = copy_string(cellecon::opex_sweep_csv(cfg->cfg, t)); });
}

cellecon_status cellecon_profit_sweep_csv(const cellecon_config* cfg, double uptake_4g,
                                          const char* cost_override_path,
                                          char** out_csv) {
  if (!cfg || !out_csv) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  return guarded([&] {
    std::optional<cellecon::CostOverride> override_costs;
    if (cost_override_path)
      override_costs = cellecon::load_cost_override_file(cost_override_path);
    *out_csv =
        copy_string(cellecon::profit_sweep_csv(cfg->cfg, uptake_4g, override_costs));
  });
}

cellecon_status cellecon_emissions_csv(const cellecon_config* cfg, const char* tech,
                                       double demand, const char* mix_path,
                                       char** out_csv) {
  if (!cfg || !out_csv) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  std::optional<cellecon::Technology> only;
  if (tech != nullptr && std::strcmp(tech, "both") != 0) {
    cellecon::Technology t;
    if (const auto rc = parse_tech(tech, t); rc != CELLECON_OK) return rc;
    only = t;
  }
  return guarded([&] {
    std::optional<cellecon::FuelMix> mix;
    if (mix_path) {
      std::ifstream in(mix_path, std::ios::binary);
      if (!in)
        throw cellecon::config_error(std::string("cannot open fuel mix '") + mix_path +
                                     "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      mix = cellecon::FuelMix::from_csv(buf.str());
    }
    const double d = demand >= 0.0 ? demand : cfg->cfg.demand_grid_mbps.back();
    *out_csv = copy_string(cellecon::emissions_csv(cfg->cfg, d, mix, only));
  });
}

cellecon_status cellecon_report_run(const cellecon_config* cfg, cellecon_report** out) {
  if (!cfg || !out) {
    set_error("null argument");
    return CELLECON_ERR_ARGUMENT;
  }
  return guarded(
      [&] { *out = new cellecon_report{cellecon::run_report(cfg->cfg)}; });
}

size_t cellecon_report_file_count(const cellecon_report* report) {
  return report ? report->bundle.files.size() : 0;
}

const char* cellecon_report_file_name(const cellecon_report* report, size_t i) {
  if (!report || i >= report->bundle.files.size()) return nullptr;
  return report->bundle.files[i].name.c_str();
}

const char* cellecon_report_file_content(const cellecon_report* report, size_t i) {
  if (!report || i >= report->bundle.files.size()) return nullptr;
  return report->bundle.files[i].content.c_str();
}

void cellecon_report_free(cellecon_report* report) { delete report; }

}  // extern "C"
