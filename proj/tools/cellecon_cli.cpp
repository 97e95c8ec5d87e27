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

// Scenario-sweep CLI. Talks to the model exclusively through the shared
// library's C interface; all it adds is argument parsing and file I/O.
//
// Exit codes: 0 success, 2 configuration error, 3 computation error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cellecon.h"

namespace {

struct ConfigDeleter {
  void operator()(cellecon_config* cfg) const { cellecon_config_free(cfg); }
};
using ConfigHandle = std::unique_ptr<cellecon_config, ConfigDeleter>;

struct StringDeleter {
  void operator()(char* s) const { cellecon_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

int exit_code_for(cellecon_status status) {
  switch (status) {
    case CELLECON_OK:
      return 0;
    case CELLECON_ERR_CONFIG:
      return 2;
    default:
      return 3;
  }
}

int fail(cellecon_status status) {
  std::cerr << "error: " << cellecon_last_error() << "\n";
  return exit_code_for(status);
}

/// "0:190:10" (start:stop:step) or "5,10,20" -> list of demands.
std::vector<double> parse_demands(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    double start = 0, stop = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 ||
        step <= 0 || stop < start)
      throw std::invalid_argument("demand range must be start:stop:step");
    for (double d = start; d <= stop + 1e-9; d += step) out.push_back(d);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty demand list");
  return out;
}

/// Writes to <out_dir>/<name> when out_dir is set, else to stdout.
int emit(const std::string& out_dir, const std::string& name,
         const std::string& content) {
  if (out_dir.empty()) {
    std::cout << content;
    return 0;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  const auto path = std::filesystem::path(out_dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    return 3;
  }
  out << content;
  std::cout << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Techno-economic scenario toolkit for 3G-HSPA vs 4G-LTE networks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::string out_dir;
  std::string annuity;
  int kf = 0;
  app.add_option("--config", config_path, "Scenario JSON file");
  app.add_option("--out", out_dir, "Output directory (default: stdout)");
  app.add_option("--annuity", annuity, "CAPEX repayment factor")
      ->check(CLI::IsMember({"standard", "paper"}));
  app.add_option("--kf", kf, "Mbit-to-GB conversion denominator")
      ->check(CLI::IsMember({1024, 8192}));

  auto* capacity = app.add_subcommand("capacity", "Spectral efficiency and capacity");

  auto* bw_gain = app.add_subcommand("bw-gain", "LTE-vs-HSPA bandwidth-gain table");

  std::string power_tech = "4g";
  std::string power_demands;
  auto* power = app.add_subcommand("power-sweep", "Power consumption over demand");
  power->add_option("--tech", power_tech)->check(CLI::IsMember({"3g", "4g"}));
  power->add_option("--demands", power_demands, "start:stop:step or comma list");

  std::string opex_tech = "4g";
  auto* opex = app.add_subcommand("opex-sweep", "Annual cost breakdown over demand");
  opex->add_option("--tech", opex_tech)->check(CLI::IsMember({"3g", "4g"}));

  auto* tariff = app.add_subcommand("tariff", "Tariff regression");
  tariff->require_subcommand(1);
  std::string fit_tech = "4g";
  auto* tariff_fit = tariff->add_subcommand("fit", "Fit the cost surface");
  tariff_fit->add_option("--tech", fit_tech)->check(CLI::IsMember({"3g", "4g"}));
  std::string predict_tech = "4g";
  double predict_minutes = 2000.0;
  double predict_data_gb = 25.0;
  auto* tariff_predict =
      tariff->add_subcommand("predict", "Evaluate the fitted surface");
  tariff_predict->add_option("--tech", predict_tech)
      ->check(CLI::IsMember({"3g", "4g"}));
  tariff_predict->add_option("--minutes", predict_minutes, "Minute allowance");
  tariff_predict->add_option("--data-gb", predict_data_gb, "Data allowance in GB");

  double uptake = 0.03;
  bool all_uptakes = false;
  std::string cost_override;
  auto* profit = app.add_subcommand("profit-sweep", "Profit per km2 over demand");
  profit->add_option("--uptake-4g", uptake, "4G subscription fraction");
  profit->add_flag("--all-uptakes", all_uptakes, "Run the configured uptake list");
  profit->add_option("--cost-override", cost_override,
                     "CSV (technology,demand_mbps_km2,cost_gbp)");

  std::string em_tech = "both";
  double em_demand = -1.0;
  std::string mix_path;
  auto* emissions = app.add_subcommand("emissions", "CO2 from annual energy");
  emissions->add_option("--tech", em_tech)->check(CLI::IsMember({"3g", "4g", "both"}));
  emissions->add_option("--demand", em_demand, "Mbps/km2 (default: top of grid)");
  emissions->add_option("--mix", mix_path, "Fuel-mix CSV (fuel,share,g_per_kwh)");

  auto* report = app.add_subcommand("report", "All tables plus summary.md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad invocation is a configuration error
  }

  cellecon_config* raw = nullptr;
  cellecon_status rc = config_path.empty() ? cellecon_config_default(&raw)
                                           : cellecon_config_load(config_path.c_str(), &raw);
  if (rc != CELLECON_OK) return fail(rc);
  ConfigHandle cfg(raw);

  if (!annuity.empty()) {
    rc = cellecon_config_set_annuity_mode(cfg.get(), annuity.c_str());
    if (rc != CELLECON_OK) return fail(rc);
  }
  if (kf != 0) {
    rc = cellecon_config_set_kf(cfg.get(), kf);
    if (rc != CELLECON_OK) return fail(rc);
  }

  auto emit_csv = [&](const std::string& name, cellecon_status status,
                      char* payload) -> int {
    if (status != CELLECON_OK) return fail(status);
    StringHandle owned(payload);
    return emit(out_dir, name, owned.get());
  };

  if (capacity->parsed()) {
    char* csv = nullptr;
    rc = cellecon_capacity_csv(cfg.get(), &csv);
    return emit_csv("capacity.csv", rc, csv);
  }
  if (bw_gain->parsed()) {
    char* csv = nullptr;
    rc = cellecon_bw_gain_csv(cfg.get(), &csv);
    return emit_csv("bw_gain.csv", rc, csv);
  }
  if (power->parsed()) {
    std::vector<double> demands;
    if (!power_demands.empty()) {
      try {
        demands = parse_demands(power_demands);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    char* csv = nullptr;
    rc = cellecon_power_sweep_csv(cfg.get(), power_tech.c_str(),
                                  demands.empty() ? nullptr : demands.data(),
                                  demands.size(), &csv);
    return emit_csv("power_" + power_tech + ".csv", rc, csv);
  }
  if (opex->parsed()) {
    char* csv = nullptr;
    rc = cellecon_opex_sweep_csv(cfg.get(), opex_tech.c_str(), &csv);
    return emit_csv("opex_" + opex_tech + ".csv", rc, csv);
  }
  if (tariff_fit->parsed()) {
    double b[5] = {0, 0, 0, 0, 0};
    rc = cellecon_tariff_fit(cfg.get(), fit_tech.c_str(), b);
    if (rc != CELLECON_OK) return fail(rc);
    std::ostringstream csv;
    csv << "technology,b0,b1,b2,b3,b4\n" << fit_tech;
    csv.setf(std::ios::fixed);
    csv.precision(8);
    for (double v : b) csv << ',' << v;
    csv << '\n';
    return emit(out_dir, "tariff_fit_" + fit_tech + ".csv", csv.str());
  }
  if (tariff_predict->parsed()) {
    double gbp = 0.0;
    rc = cellecon_tariff_predict(cfg.get(), predict_tech.c_str(), predict_minutes,
                                 predict_data_gb * 1000.0, &gbp);
    if (rc != CELLECON_OK) return fail(rc);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f\n", gbp);
    std::cout << buf;
    return 0;
  }
  if (profit->parsed()) {
    const char* override_path = cost_override.empty() ? nullptr : cost_override.c_str();
    std::vector<double> uptakes;
    if (all_uptakes) {
      for (size_t i = 0; i < cellecon_config_uptake_count(cfg.get()); ++i)
        uptakes.push_back(cellecon_config_uptake(cfg.get(), i));
    } else {
      uptakes.push_back(uptake);
    }
    int code = 0;
    for (double u : uptakes) {
      char* csv = nullptr;
      rc = cellecon_profit_sweep_csv(cfg.get(), u, override_path, &csv);
      char name[64];
      std::snprintf(name, sizeof name, "profit_uptake_%gpct.csv", u * 100.0);
      code = std::max(code, emit_csv(name, rc, csv));
      if (code == 2 || code == 3) return code;
    }
    return code;
  }
  if (emissions->parsed()) {
    char* csv = nullptr;
    rc = cellecon_emissions_csv(cfg.get(), em_tech.c_str(), em_demand,
                                mix_path.empty() ? nullptr : mix_path.c_str(), &csv);
    return emit_csv("emissions.csv", rc, csv);
  }
  if (report->parsed()) {
    cellecon_report* rep = nullptr;
    rc = cellecon_report_run(cfg.get(), &rep);
    if (rc != CELLECON_OK) return fail(rc);
    const std::string dir = out_dir.empty() ? "out" : out_dir;
    int code = 0;
    for (size_t i = 0; i < cellecon_report_file_count(rep); ++i) {
      code = std::max(code, emit(dir, cellecon_report_file_name(rep, i),
                                 cellecon_report_file_content(rep, i)));
    }
    cellecon_report_free(rep);
    return code;
  }
  return 0;
}
