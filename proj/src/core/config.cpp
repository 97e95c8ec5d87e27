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

#include "config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "builtin_data.hpp"
#include "csv.hpp"

namespace cellecon {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw config_error("config key '" + key + "': " + why);
}

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<const char*> known) {
  for (const auto& item : obj.items()) {
    bool found = false;
    for (const char* k : known)
      if (item.key() == k) { found = true; break; }
    if (!found)
      throw config_error("unknown config key '" + prefix + item.key() + "'");
  }
}

double get_number(const json& obj, const std::string& prefix, const char* key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) bad_key(prefix + key, "expected a number");
  return obj[key].get<double>();
}

long get_integer(const json& obj, const std::string& prefix, const char* key,
                 long fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) bad_key(prefix + key, "expected an integer");
  return obj[key].get<long>();
}

std::string get_string(const json& obj, const std::string& prefix, const char* key,
                       const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_string()) bad_key(prefix + key, "expected a string");
  return obj[key].get<std::string>();
}

void parse_technology(const json& obj, const std::string& prefix,
                      TechnologyProfile& tech) {
  reject_unknown(obj, prefix,
                 {"s_eff_bits_per_hz", "mu", "bandwidth_mhz", "per_user_cap_mhz",
                  "cells_per_km2", "capacity_cells_per_km2", "inter_site_distance_km",
                  "allow_area_mismatch"});
  tech.s_eff_bits_per_hz =
      get_number(obj, prefix, "s_eff_bits_per_hz", tech.s_eff_bits_per_hz);
  tech.mu = get_number(obj, prefix, "mu", tech.mu);
  tech.bandwidth_mhz = get_number(obj, prefix, "bandwidth_mhz", tech.bandwidth_mhz);
  tech.per_user_cap_mhz =
      get_number(obj, prefix, "per_user_cap_mhz", tech.per_user_cap_mhz);
  tech.deployment.cells_per_km2 =
      get_number(obj, prefix, "cells_per_km2", tech.deployment.cells_per_km2);
  if (obj.contains("capacity_cells_per_km2"))
    tech.deployment.capacity_cells_per_km2 =
        get_number(obj, prefix, "capacity_cells_per_km2", 0.0);
  if (obj.contains("inter_site_distance_km"))
    tech.deployment.inter_site_distance_km =
        get_number(obj, prefix, "inter_site_distance_km", 0.0);
  if (obj.contains("allow_area_mismatch")) {
    if (!obj["allow_area_mismatch"].is_boolean())
      bad_key(prefix + "allow_area_mismatch", "expected a boolean");
    tech.deployment.allow_area_mismatch = obj["allow_area_mismatch"].get<bool>();
  }
}

}  // namespace

std::vector<double> ScenarioConfig::power_grid_mbps() const {
  std::vector<double> grid;
  grid.reserve(demand_grid_mbps.size() + 1);
  grid.push_back(0.0);
  grid.insert(grid.end(), demand_grid_mbps.begin(), demand_grid_mbps.end());
  return grid;
}

void ScenarioConfig::validate() const {
  auto check_tech = [](const TechnologyProfile& t, const std::string& name) {
    if (!(t.s_eff_bits_per_hz > 0.0) || t.s_eff_bits_per_hz > 2.25)
      throw config_error("config key '" + name +
                         ".s_eff_bits_per_hz': must lie in (0, 2.25]");
    if (!(t.mu >= 1.0))
      throw config_error("config key '" + name + ".mu': must be >= 1");
    if (!(t.bandwidth_mhz > 0.0))
      throw config_error("config key '" + name + ".bandwidth_mhz': must be > 0");
    if (!(t.per_user_cap_mhz > 0.0))
      throw config_error("config key '" + name + ".per_user_cap_mhz': must be > 0");
    try {
      t.deployment.validate();
    } catch (const domain_error& e) {
      throw config_error("config key '" + name + "': " + e.what());
    }
  };
  check_tech(lte, "technologies.4g");
  check_tech(hspa, "technologies.3g");

  try {
    power.validate();
    capex.validate();
    opex.validate();
    hspa_opex().validate();
    fuel_mix.validate();
    usage.validate();
  } catch (const domain_error& e) {
    throw config_error(e.what());
  }

  if (hours_per_day < 1 || hours_per_day > 24)
    throw config_error("config key 'power.hours_per_day': must lie in [1, 24]");
  if (days_per_year < 1 || days_per_year > 366)
    throw config_error("config key 'power.days_per_year': must lie in [1, 366]");
  if (!(user_density_per_km2 > 0.0))
    throw config_error("config key 'profit.user_density_per_km2': must be > 0");
  for (double f : uptake_fractions_4g)
    if (f < 0.0 || f > 1.0)
      throw config_error(
          "config key 'profit.uptake_fractions_4g': uptake_fraction_4g must lie "
          "in [0, 1]");
  if (demand_grid_mbps.empty())
    throw config_error("config key 'profit.demand_grid_mbps_km2': must not be empty");
  for (double d : demand_grid_mbps)
    if (!(d > 0.0))
      throw config_error(
          "config key 'profit.demand_grid_mbps_km2': demands must be > 0");
  if (reference_cell_count < 1)
    throw config_error("config key 'emissions.reference_cell_count': must be >= 1");
}

ScenarioConfig default_config() {
  ScenarioConfig cfg;
  cfg.lte.s_eff_bits_per_hz = 2.14;
  cfg.lte.mu = 1.0;
  cfg.lte.bandwidth_mhz = 20.0;
  cfg.lte.per_user_cap_mhz = 20.0;
  cfg.lte.deployment.cells_per_km2 = 4.6;
  cfg.lte.deployment.capacity_cells_per_km2 = 4.62;
  cfg.lte.deployment.inter_site_distance_km = 0.5;

  cfg.hspa.s_eff_bits_per_hz = 0.82;
  cfg.hspa.mu = 8.0;
  cfg.hspa.bandwidth_mhz = 20.0;
  cfg.hspa.per_user_cap_mhz = 5.0;
  cfg.hspa.deployment.cells_per_km2 = 12.4;
  cfg.hspa.deployment.inter_site_distance_km = 0.3;

  cfg.corpus_text_3g = builtin_tariffs_3g();
  cfg.corpus_text_4g = builtin_tariffs_4g();

  cfg.demand_grid_mbps.push_back(5.0);
  for (double d = 10.0; d <= 190.0; d += 10.0) cfg.demand_grid_mbps.push_back(d);

  cfg.fuel_mix = FuelMix::uk_default();
  return cfg;
}

ScenarioConfig load_config_text(const std::string& json_text,
                                const std::string& base_dir) {
  ScenarioConfig cfg = default_config();

  std::string trimmed = json_text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (trimmed.empty()) {
    cfg.validate();
    return cfg;  // an empty document means the baseline
  }

  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw config_error("config root must be a JSON object");

  reject_unknown(doc, "",
                 {"technologies", "power", "cost", "tariff", "profit", "emissions",
                  "output_dir"});

  if (doc.contains("technologies")) {
    const auto& t = doc["technologies"];
    if (!t.is_object()) bad_key("technologies", "expected an object");
    reject_unknown(t, "technologies.", {"3g", "4g"});
    if (t.contains("4g")) parse_technology(t["4g"], "technologies.4g.", cfg.lte);
    if (t.contains("3g")) parse_technology(t["3g"], "technologies.3g.", cfg.hspa);
  }

  if (doc.contains("power")) {
    const auto& p = doc["power"];
    if (!p.is_object()) bad_key("power", "expected an object");
    reject_unknown(p, "power.",
                   {"n_antennas", "p_transmit_w", "radio_head_efficiency",
                    "overhead_plus_backhaul_w", "hours_per_day", "days_per_year"});
    cfg.power.n_antennas =
        static_cast<int>(get_integer(p, "power.", "n_antennas", cfg.power.n_antennas));
    cfg.power.p_transmit_w =
        get_number(p, "power.", "p_transmit_w", cfg.power.p_transmit_w);
    cfg.power.radio_head_efficiency = get_number(p, "power.", "radio_head_efficiency",
                                                 cfg.power.radio_head_efficiency);
    cfg.power.overhead_plus_backhaul_w = get_number(
        p, "power.", "overhead_plus_backhaul_w", cfg.power.overhead_plus_backhaul_w);
    cfg.hours_per_day =
        static_cast<int>(get_integer(p, "power.", "hours_per_day", cfg.hours_per_day));
    cfg.days_per_year =
        static_cast<int>(get_integer(p, "power.", "days_per_year", cfg.days_per_year));
  }

  if (doc.contains("cost")) {
    const auto& c = doc["cost"];
    if (!c.is_object()) bad_key("cost", "expected an object");
    reject_unknown(c, "cost.",
                   {"cell_equipment_gbp", "insertion_gbp", "backhaul_install_gbp",
                    "total_spectrum_gbp", "network_cell_count", "site_rent_gbp",
                    "backhaul_rent_gbp", "energy_price_gbp_per_kwh", "maintenance_gbp",
                    "marketing_fraction", "interest_rate", "loan_years",
                    "annuity_mode"});
    cfg.capex.cell_equipment_gbp =
        get_number(c, "cost.", "cell_equipment_gbp", cfg.capex.cell_equipment_gbp);
    cfg.capex.insertion_gbp =
        get_number(c, "cost.", "insertion_gbp", cfg.capex.insertion_gbp);
    cfg.capex.backhaul_install_gbp =
        get_number(c, "cost.", "backhaul_install_gbp", cfg.capex.backhaul_install_gbp);
    cfg.capex.total_spectrum_gbp =
        get_number(c, "cost.", "total_spectrum_gbp", cfg.capex.total_spectrum_gbp);
    cfg.capex.network_cell_count =
        get_integer(c, "cost.", "network_cell_count", cfg.capex.network_cell_count);
    cfg.opex.site_rent_gbp =
        get_number(c, "cost.", "site_rent_gbp", cfg.opex.site_rent_gbp);
    cfg.opex.backhaul_rent_gbp =
        get_number(c, "cost.", "backhaul_rent_gbp", cfg.opex.backhaul_rent_gbp);
    cfg.opex.energy_price_gbp_per_kwh = get_number(
        c, "cost.", "energy_price_gbp_per_kwh", cfg.opex.energy_price_gbp_per_kwh);
    cfg.opex.maintenance_gbp =
        get_number(c, "cost.", "maintenance_gbp", cfg.opex.maintenance_gbp);
    cfg.opex.marketing_fraction =
        get_number(c, "cost.", "marketing_fraction", cfg.opex.marketing_fraction);
    cfg.opex.interest_rate =
        get_number(c, "cost.", "interest_rate", cfg.opex.interest_rate);
    cfg.opex.loan_years =
        static_cast<int>(get_integer(c, "cost.", "loan_years", cfg.opex.loan_years));
    if (c.contains("annuity_mode")) {
      const std::string mode = get_string(c, "cost.", "annuity_mode", "standard");
      if (mode == "paper" || mode == "paper_appendix")
        cfg.annuity_mode = AnnuityMode::paper_appendix;
      else if (mode == "standard")
        cfg.annuity_mode = AnnuityMode::standard;
      else
        bad_key("cost.annuity_mode", "expected 'standard' or 'paper'");
    }
  }

  if (doc.contains("tariff")) {
    const auto& t = doc["tariff"];
    if (!t.is_object()) bad_key("tariff", "expected an object");
    reject_unknown(t, "tariff.",
                   {"corpus_3g", "corpus_4g", "unlimited_minutes", "unlimited_data_gb",
                    "gb_to_mb"});
    cfg.tariff_rules.unlimited_minutes = get_number(
        t, "tariff.", "unlimited_minutes", cfg.tariff_rules.unlimited_minutes);
    cfg.tariff_rules.unlimited_data_gb = get_number(
        t, "tariff.", "unlimited_data_gb", cfg.tariff_rules.unlimited_data_gb);
    cfg.tariff_rules.gb_to_mb =
        get_number(t, "tariff.", "gb_to_mb", cfg.tariff_rules.gb_to_mb);
    auto resolve = [&](const char* key) -> std::string {
      const std::string rel = get_string(t, "tariff.", key, "");
      if (rel.empty()) return "";
      std::filesystem::path p(rel);
      if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
      return read_file(p.string());
    };
    if (t.contains("corpus_3g")) cfg.corpus_text_3g = resolve("corpus_3g");
    if (t.contains("corpus_4g")) cfg.corpus_text_4g = resolve("corpus_4g");
  }

  if (doc.contains("profit")) {
    const auto& p = doc["profit"];
    if (!p.is_object()) bad_key("profit", "expected an object");
    reject_unknown(p, "profit.",
                   {"user_density_per_km2", "uptake_fractions_4g",
                    "demand_grid_mbps_km2", "kf_denominator", "active_hours_per_day",
                    "days_per_month"});
    cfg.user_density_per_km2 =
        get_number(p, "profit.", "user_density_per_km2", cfg.user_density_per_km2);
    if (p.contains("uptake_fractions_4g")) {
      if (!p["uptake_fractions_4g"].is_array())
        bad_key("profit.uptake_fractions_4g", "expected an array of fractions");
      cfg.uptake_fractions_4g.clear();
      for (const auto& v : p["uptake_fractions_4g"]) {
        if (!v.is_number())
          bad_key("profit.uptake_fractions_4g", "expected a number");
        cfg.uptake_fractions_4g.push_back(v.get<double>());
      }
    }
    if (p.contains("demand_grid_mbps_km2")) {
      if (!p["demand_grid_mbps_km2"].is_array())
        bad_key("profit.demand_grid_mbps_km2", "expected an array of rates");
      cfg.demand_grid_mbps.clear();
      for (const auto& v : p["demand_grid_mbps_km2"]) {
        if (!v.is_number()) bad_key("profit.demand_grid_mbps_km2", "expected a number");
        cfg.demand_grid_mbps.push_back(v.get<double>());
      }
    }
    const long kf = get_integer(p, "profit.", "kf_denominator", 1024);
    if (kf != 1024 && kf != 8192)
      bad_key("profit.kf_denominator", "expected 1024 or 8192");
    cfg.usage.k_f = 1.0 / static_cast<double>(kf);
    cfg.usage.active_hours_per_day = get_number(p, "profit.", "active_hours_per_day",
                                                cfg.usage.active_hours_per_day);
    cfg.usage.days_per_month =
        get_number(p, "profit.", "days_per_month", cfg.usage.days_per_month);
  }

  if (doc.contains("emissions")) {
    const auto& e = doc["emissions"];
    if (!e.is_object()) bad_key("emissions", "expected an object");
    reject_unknown(e, "emissions.", {"reference_cell_count", "fuel_mix"});
    cfg.reference_cell_count = get_integer(e, "emissions.", "reference_cell_count",
                                           cfg.reference_cell_count);
    if (e.contains("fuel_mix")) {
      if (!e["fuel_mix"].is_array())
        bad_key("emissions.fuel_mix", "expected an array");
      cfg.fuel_mix.entries.clear();
      for (const auto& entry : e["fuel_mix"]) {
        if (!entry.is_object()) bad_key("emissions.fuel_mix", "expected objects");
        reject_unknown(entry, "emissions.fuel_mix.", {"fuel", "share", "g_per_kwh"});
        FuelShare share;
        share.fuel = get_string(entry, "emissions.fuel_mix.", "fuel", "");
        share.share = get_number(entry, "emissions.fuel_mix.", "share", -1.0);
        share.g_per_kwh = get_number(entry, "emissions.fuel_mix.", "g_per_kwh", -1.0);
        cfg.fuel_mix.entries.push_back(std::move(share));
      }
    }
  }

  cfg.output_dir = get_string(doc, "", "output_dir", cfg.output_dir);

  cfg.validate();
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  const std::string text = read_file(path);
  const std::string base = std::filesystem::path(path).parent_path().string();
  return load_config_text(text, base);
}

CostOverride load_cost_override(const std::string& csv_text) {
  const auto table = parse_csv(csv_text);
  if (table.empty() ||
      table.front() != std::vector<std::string>{"technology", "demand_mbps_km2",
                                                "cost_gbp"})
    throw parse_error("cost override header must be technology,demand_mbps_km2,cost_gbp",
                      1);
  CostOverride out;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& row = table[i];
    const long line = static_cast<long>(i) + 1;
    if (row.size() != 3) throw parse_error("expected 3 fields", line);
    try {
      const Technology tech = technology_from_string(row[0]);
      out[{tech, std::stod(row[1])}] = std::stod(row[2]);
    } catch (const std::exception&) {
      throw parse_error("bad cost override row", line);
    }
  }
  return out;
}

CostOverride load_cost_override_file(const std::string& path) {
  return load_cost_override(read_file(path));
}

}  // namespace cellecon
