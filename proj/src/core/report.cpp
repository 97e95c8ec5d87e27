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

#include "report.hpp"

#include <algorithm>
#include <cmath>

#include "csv.hpp"
#include "spectral.hpp"
#include "users.hpp"

namespace cellecon {

namespace {

std::string tech_label(Technology tech) { return to_string(tech); }

/// The occupancy analysis is anchored at the whole-Mb/s cell rate the
/// source rounds to (5 MHz * 0.82 bits/s/Hz ~ 4 Mb/s).
double hspa_mean_cell_rate_bps(const ScenarioConfig& cfg) {
  const double exact =
      cfg.hspa.per_user_cap_mhz * cfg.hspa.s_eff_bits_per_hz * 1e6;
  const double rounded = std::round(exact / 1e6) * 1e6;
  return rounded > 0.0 ? rounded : exact;
}

std::string format_level(const TariffLevel& level) {
  return level.unlimited() ? "Unlimited" : format_fixed(*level.gb, 1);
}

std::string format_pct(double fraction) {
  const double pct = fraction * 100.0;
  if (pct == std::round(pct)) return format_fixed(pct, 0);
  return format_fixed(pct, 1);
}

/// The deployments are sized so both technologies offer the same area
/// capacity; the published sweeps share a single load column derived from
/// the LTE figure, and every load-dependent output follows it.
double comparison_capacity(const ScenarioConfig& cfg) {
  return area_capacity_mbps_km2(cfg.lte.deployment, cfg.lte.cell_capacity_mbps());
}

/// Area power for one technology at one demand point, on the shared load
/// basis; overload is judged against the technology's own capacity.
double area_power_kw_for(const ScenarioConfig& cfg, Technology tech, double demand) {
  const TechnologyProfile& profile = cfg.profile(tech);
  const double own =
      area_capacity_mbps_km2(profile.deployment, profile.cell_capacity_mbps());
  if (demand > own) throw overload_error(demand, own);
  const double basis = comparison_capacity(cfg);
  const double load = std::min(demand / basis, 1.0);
  return profile.deployment.cells_per_km2 * cell_power_w(cfg.power, load) / 1000.0;
}

}  // namespace

const NamedFile* ReportBundle::find(const std::string& name) const {
  for (const auto& f : files)
    if (f.name == name) return &f;
  return nullptr;
}

RegressionCoefficients fit_tariffs(const ScenarioConfig& cfg, Technology tech) {
  const std::string& text =
      tech == Technology::lte_4g ? cfg.corpus_text_4g : cfg.corpus_text_3g;
  const auto records = load_corpus(text, tech);
  std::vector<NormalizedTariff> normalized;
  normalized.reserve(records.size());
  for (const auto& r : records) normalized.push_back(normalize(r, cfg.tariff_rules));
  return fit(normalized);
}

double annual_cost_per_km2(const ScenarioConfig& cfg, Technology tech,
                           double demand_mbps_km2) {
  const TechnologyProfile& profile = cfg.profile(tech);
  const double pkw = area_power_kw_for(cfg, tech, demand_mbps_km2);
  const double energy_cell = annual_energy_per_cell_kwh(
      pkw, profile.deployment, cfg.hours_per_day, cfg.days_per_year);
  const OpexParams opex = tech == Technology::lte_4g ? cfg.opex : cfg.hspa_opex();
  return total_annual_cost_per_km2(opex, cfg.capex, profile.deployment, energy_cell,
                                   cfg.annuity_mode);
}

TechEconomics technology_economics(const ScenarioConfig& cfg, Technology tech,
                                   const std::optional<CostOverride>& override_costs) {
  TechEconomics econ;
  econ.tariff = fit_tariffs(cfg, tech);
  if (override_costs) {
    const CostOverride table = *override_costs;
    econ.annual_cost_per_km2 = [table, tech](double demand) {
      const auto it = table.find({tech, demand});
      if (it == table.end())
        throw domain_error("cost override has no " + to_string(tech) + " row for " +
                           format_fixed(demand, 2) + " Mbps/km2");
      return it->second;
    };
  } else {
    econ.annual_cost_per_km2 = [&cfg, tech](double demand) {
      return annual_cost_per_km2(cfg, tech, demand);
    };
  }
  return econ;
}

std::string capacity_csv(const ScenarioConfig& cfg) {
  CsvBuilder csv({"technology", "mu", "s_eff_configured", "s_eff_quadrature",
                  "bandwidth_mhz", "cell_capacity_mbps", "capacity_cells_per_km2",
                  "area_capacity_mbps_km2"});
  for (Technology tech : {Technology::lte_4g, Technology::hspa_3g}) {
    const TechnologyProfile& p = cfg.profile(tech);
    const SpectralEfficiency computed =
        spectral_efficiency(SinrInefficiency{p.mu}, QuadratureConfig{});
    const double cell = p.cell_capacity_mbps();
    csv.add_row({tech_label(tech), format_fixed(p.mu, 2),
                 format_fixed(p.s_eff_bits_per_hz, 2), format_fixed(computed.value, 4),
                 format_fixed(p.bandwidth_mhz, 2), format_fixed(cell, 2),
                 format_fixed(p.deployment.capacity_density(), 2),
                 format_fixed(area_capacity_mbps_km2(p.deployment, cell), 2)});
  }
  return csv.text();
}

std::string bw_gain_csv(const ScenarioConfig& cfg) {
  const auto model = lambda_from_rate(hspa_mean_cell_rate_bps(cfg));
  const auto rows =
      bw_gain_table(model, 7, cfg.lte.bandwidth_mhz, cfg.lte.per_user_cap_mhz,
                    cfg.hspa.per_user_cap_mhz);
  CsvBuilder csv({"n_users", "bw_lte_mhz", "bw_hspa_mhz", "gain", "probability"});
  for (const auto& row : rows)
    csv.add_row({std::to_string(row.n_users), format_fixed(row.lte_bw_mhz, 4),
                 format_fixed(row.hspa_bw_mhz, 4), format_fixed(row.gain, 4),
                 format_fixed(row.probability, 5)});
  return csv.text();
}

std::string power_sweep_csv(const ScenarioConfig& cfg, Technology tech,
                            const std::vector<double>& demands) {
  const TechnologyProfile& profile = cfg.profile(tech);
  const auto rows = power_sweep(cfg.power, profile.deployment, demands,
                                profile.cell_capacity_mbps(),
                                comparison_capacity(cfg));
  const double capacity =
      area_capacity_mbps_km2(profile.deployment, profile.cell_capacity_mbps());
  CsvBuilder csv({"P_T", "mu_RH", "R_km2", "C_km2", "P_OH_BH", "P_cell_W",
                  "P_km2_kW"});
  for (const auto& row : rows)
    csv.add_row({format_fixed(cfg.power.p_transmit_w, 2),
                 format_fixed(cfg.power.radio_head_efficiency, 2),
                 format_fixed(row.demand_mbps_km2, 2), format_fixed(capacity, 2),
                 format_fixed(cfg.power.overhead_plus_backhaul_w, 2),
                 format_fixed(row.p_cell_w, 2), format_fixed(row.p_km2_kw, 2)});
  return csv.text();
}

std::string energy_csv(const ScenarioConfig& cfg) {
  CsvBuilder csv({"technology", "demand_mbps_km2", "p_km2_kw",
                  "annual_energy_kwh_km2", "annual_energy_kwh_per_cell"});
  for (Technology tech : {Technology::lte_4g, Technology::hspa_3g}) {
    const TechnologyProfile& profile = cfg.profile(tech);
    for (double demand : cfg.power_grid_mbps()) {
      const double pkw = area_power_kw_for(cfg, tech, demand);
      const double per_cell = annual_energy_per_cell_kwh(
          pkw, profile.deployment, cfg.hours_per_day, cfg.days_per_year);
      csv.add_row({tech_label(tech), format_fixed(demand, 2), format_fixed(pkw, 2),
                   format_fixed(per_cell * profile.deployment.cells_per_km2, 2),
                   format_fixed(per_cell, 2)});
    }
  }
  return csv.text();
}

std::string opex_sweep_csv(const ScenarioConfig& cfg, Technology tech) {
  const TechnologyProfile& profile = cfg.profile(tech);
  const OpexParams opex = tech == Technology::lte_4g ? cfg.opex : cfg.hspa_opex();
  const auto rows = opex_sweep(opex, cfg.capex, cfg.power, profile.deployment,
                               cfg.demand_grid_mbps, profile.cell_capacity_mbps(),
                               cfg.annuity_mode, comparison_capacity(cfg),
                               cfg.hours_per_day, cfg.days_per_year);
  const bool amortized = opex.amortize_capex;
  std::vector<std::string> header = {"R_km2",       "electricity_km2",
                                     "electricity", "backhaul_rent",
                                     "site_rental", "maintenance"};
  if (amortized) {
    header.push_back("marketing");
    header.push_back("capex_per_cell");
    header.push_back("capex_repayment");
  }
  header.push_back("total_km2");
  CsvBuilder csv(std::move(header));
  for (const auto& row : rows) {
    std::vector<std::string> fields = {
        format_fixed(row.demand_mbps_km2, 2), format_fixed(row.electricity_km2_gbp, 2),
        format_fixed(row.electricity_per_cell_gbp, 2),
        format_fixed(row.backhaul_rent_gbp, 2), format_fixed(row.site_rent_gbp, 2),
        format_fixed(row.maintenance_gbp, 2)};
    if (amortized) {
      fields.push_back(format_fixed(row.marketing_gbp, 2));
      fields.push_back(format_fixed(row.capex_per_cell_gbp, 2));
      fields.push_back(format_fixed(row.capex_repayment_gbp, 2));
    }
    fields.push_back(format_fixed(row.total_km2_gbp, 2));
    csv.add_row(std::move(fields));
  }
  return csv.text();
}

std::string tariff_fit_csv(const ScenarioConfig& cfg) {
  CsvBuilder csv({"technology", "b0", "b1", "b2", "b3", "b4",
                  "unlimited_charge_gbp"});
  for (Technology tech : {Technology::lte_4g, Technology::hspa_3g}) {
    const auto coeffs = fit_tariffs(cfg, tech);
    const double charge =
        tariff_charge(coeffs, TariffLevel{std::nullopt}, cfg.tariff_rules);
    csv.add_row({tech_label(tech), format_fixed(coeffs.b[0], 8),
                 format_fixed(coeffs.b[1], 8), format_fixed(coeffs.b[2], 8),
                 format_fixed(coeffs.b[3], 8), format_fixed(coeffs.b[4], 8),
                 format_fixed(charge, 2)});
  }
  return csv.text();
}

std::string profit_sweep_csv(const ScenarioConfig& cfg, double uptake_4g,
                             const std::optional<CostOverride>& override_costs) {
  UptakeScenario scenario;
  scenario.uptake_fraction_4g = uptake_4g;
  scenario.user_density_per_km2 = cfg.user_density_per_km2;
  scenario.demand_grid_mbps = cfg.demand_grid_mbps;
  const auto pairs = profit_sweep(
      scenario, technology_economics(cfg, Technology::lte_4g, override_costs),
      technology_economics(cfg, Technology::hspa_3g, override_costs), cfg.usage,
      cfg.tariff_rules);

  CsvBuilder csv({"technology", "uptake_pct", "demand_mbps_km2", "subscribers_per_km2",
                  "rate_mbps_per_sub", "usage_mb_per_month", "usage_gb_per_month",
                  "tariff_gb", "tariff_gbp_per_month", "annual_revenue_gbp",
                  "annual_cost_gbp", "profit_gbp", "total_profit_gbp"});
  auto add = [&](const ProfitRow& row, double total) {
    csv.add_row({tech_label(row.technology), format_pct(row.uptake_fraction),
                 format_fixed(row.demand_mbps_km2, 2),
                 std::to_string(row.subscribers_per_km2),
                 format_fixed(row.rate_mbps_per_sub, 4),
                 format_fixed(row.usage_mb_per_month, 2),
                 format_fixed(row.usage_gb_per_month, 2),
                 row.subscribers_per_km2 > 0 ? format_level(row.tariff) : "",
                 format_fixed(row.charge_gbp_per_month, 2),
                 format_fixed(row.annual_revenue_gbp, 2),
                 format_fixed(row.annual_cost_gbp, 2), format_fixed(row.profit_gbp, 2),
                 format_fixed(total, 2)});
  };
  for (const auto& pair : pairs) {
    add(pair.lte, pair.total_profit_gbp);
    add(pair.hspa, pair.total_profit_gbp);
  }
  return csv.text();
}

std::string emissions_csv(const ScenarioConfig& cfg, double demand_mbps_km2,
                          const std::optional<FuelMix>& mix_override,
                          const std::optional<Technology>& only) {
  const FuelMix& mix = mix_override ? *mix_override : cfg.fuel_mix;
  CsvBuilder csv({"technology", "demand_mbps_km2", "fuel", "share", "g_per_kwh",
                  "tonnes_per_km2", "network_tonnes"});
  for (Technology tech : {Technology::lte_4g, Technology::hspa_3g}) {
    if (only && *only != tech) continue;
    const double pkw = area_power_kw_for(cfg, tech, demand_mbps_km2);
    const double energy_km2 = pkw * cfg.hours_per_day * cfg.days_per_year;
    const auto report = total_emissions(energy_km2, mix);
    for (std::size_t i = 0; i < report.per_fuel_tonnes.size(); ++i) {
      const auto& [fuel, tonnes] = report.per_fuel_tonnes[i];
      EmissionReport single;
      single.total_tonnes = tonnes;
      const double network = network_emissions_tonnes(
          single, cfg.reference_cell_count, cfg.hspa.deployment, cfg.lte.deployment,
          tech);
      csv.add_row({tech_label(tech), format_fixed(demand_mbps_km2, 2), fuel,
                   format_fixed(mix.entries[i].share, 4),
                   format_fixed(mix.entries[i].g_per_kwh, 2), format_fixed(tonnes, 2),
                   format_fixed(network, 0)});
    }
    const double network_total = network_emissions_tonnes(
        report, cfg.reference_cell_count, cfg.hspa.deployment, cfg.lte.deployment,
        tech);
    csv.add_row({tech_label(tech), format_fixed(demand_mbps_km2, 2), "total",
                 format_fixed(1.0, 4), format_fixed(weighted_intensity(mix), 2),
                 format_fixed(report.total_tonnes, 2),
                 format_fixed(network_total, 0)});
  }
  return csv.text();
}

ReportBundle run_report(const ScenarioConfig& cfg) {
  cfg.validate();
  ReportBundle bundle;
  bundle.files.push_back({"capacity.csv", capacity_csv(cfg)});
  bundle.files.push_back({"bw_gain.csv", bw_gain_csv(cfg)});
  bundle.files.push_back(
      {"power_4g.csv",
       power_sweep_csv(cfg, Technology::lte_4g, cfg.power_grid_mbps())});
  bundle.files.push_back(
      {"power_3g.csv",
       power_sweep_csv(cfg, Technology::hspa_3g, cfg.power_grid_mbps())});
  bundle.files.push_back({"energy.csv", energy_csv(cfg)});
  bundle.files.push_back({"opex_4g.csv", opex_sweep_csv(cfg, Technology::lte_4g)});
  bundle.files.push_back({"opex_3g.csv", opex_sweep_csv(cfg, Technology::hspa_3g)});
  bundle.files.push_back({"tariff_fit.csv", tariff_fit_csv(cfg)});
  for (double uptake : cfg.uptake_fractions_4g) {
    bundle.files.push_back({"profit_uptake_" + format_pct(uptake) + "pct.csv",
                            profit_sweep_csv(cfg, uptake, std::nullopt)});
  }
  const double max_demand = cfg.demand_grid_mbps.back();
  bundle.files.push_back({"emissions.csv",
                          emissions_csv(cfg, max_demand, std::nullopt)});

  // Headline summary.
  std::string md;
  md += "# Scenario summary\n\n";

  const double cap4 =
      area_capacity_mbps_km2(cfg.lte.deployment, cfg.lte.cell_capacity_mbps());
  const double cap3 =
      area_capacity_mbps_km2(cfg.hspa.deployment, cfg.hspa.cell_capacity_mbps());
  md += "- Cell capacity: 4G " + format_fixed(cfg.lte.cell_capacity_mbps(), 1) +
        " Mbps, 3G " + format_fixed(cfg.hspa.cell_capacity_mbps(), 1) + " Mbps\n";
  md += "- Area capacity: 4G " + format_fixed(cap4, 2) + ", 3G " +
        format_fixed(cap3, 2) + " Mbps/km2\n";

  const double pkw4 = area_power_kw_for(cfg, Technology::lte_4g, max_demand);
  const double pkw3 = area_power_kw_for(cfg, Technology::hspa_3g, max_demand);
  md += "- Power at " + format_fixed(max_demand, 0) + " Mbps/km2: 4G " +
        format_fixed(pkw4, 2) + " kW/km2, 3G " + format_fixed(pkw3, 2) +
        " kW/km2 (4G/3G ratio " + format_fixed(pkw4 / pkw3, 3) + ", a " +
        format_fixed((1.0 - pkw4 / pkw3) * 100.0, 0) + "% power reduction)\n";

  const double e4 = pkw4 * cfg.hours_per_day * cfg.days_per_year;
  const double e3 = pkw3 * cfg.hours_per_day * cfg.days_per_year;
  md += "- Annual energy at " + format_fixed(max_demand, 0) + " Mbps/km2: 4G " +
        format_fixed(e4, 0) + " kWh/km2, 3G " + format_fixed(e3, 0) + " kWh/km2\n";

  const double min_demand = cfg.demand_grid_mbps.front();
  const double cost4 = annual_cost_per_km2(cfg, Technology::lte_4g, min_demand);
  const double cost3 = annual_cost_per_km2(cfg, Technology::hspa_3g, min_demand);
  md += "- Annual cost at " + format_fixed(min_demand, 0) + " Mbps/km2: 4G GBP " +
        format_gbp(cost4) + ", 3G GBP " + format_gbp(cost3) + " (ratio " +
        format_fixed(cost4 / cost3, 3) + ", a " +
        format_fixed((1.0 - cost4 / cost3) * 100.0, 0) + "% OPEX reduction)\n";

  // Break-even: the smallest configured uptake whose 4G profit is positive at
  // every demand point.
  std::string break_even = "none";
  const auto lte_econ = technology_economics(cfg, Technology::lte_4g, std::nullopt);
  const auto hspa_econ = technology_economics(cfg, Technology::hspa_3g, std::nullopt);
  std::vector<double> sorted_uptakes = cfg.uptake_fractions_4g;
  std::sort(sorted_uptakes.begin(), sorted_uptakes.end());
  for (double uptake : sorted_uptakes) {
    UptakeScenario scenario{uptake, cfg.user_density_per_km2, cfg.demand_grid_mbps};
    const auto pairs =
        profit_sweep(scenario, lte_econ, hspa_econ, cfg.usage, cfg.tariff_rules);
    bool all_positive = true;
    for (const auto& pair : pairs)
      if (pair.lte.profit_gbp <= 0.0) { all_positive = false; break; }
    if (all_positive) {
      break_even = format_pct(uptake) + "%";
      break;
    }
  }
  md += "- Smallest configured 4G uptake that is profitable at every demand "
        "point: " + break_even + "\n";

  const auto em4 = total_emissions(e4, cfg.fuel_mix);
  const auto em3 = total_emissions(e3, cfg.fuel_mix);
  md += "- CO2 at " + format_fixed(max_demand, 0) + " Mbps/km2: 4G " +
        format_fixed(em4.total_tonnes, 2) + " t/km2, 3G " +
        format_fixed(em3.total_tonnes, 2) + " t/km2 (a " +
        format_fixed((1.0 - em4.total_tonnes / em3.total_tonnes) * 100.0, 0) +
        "% CO2 reduction)\n";
  const double net4 = network_emissions_tonnes(
      em4, cfg.reference_cell_count, cfg.hspa.deployment, cfg.lte.deployment,
      Technology::lte_4g);
  const double net3 = network_emissions_tonnes(
      em3, cfg.reference_cell_count, cfg.hspa.deployment, cfg.lte.deployment,
      Technology::hspa_3g);
  md += "- Network CO2 (reference fleet of " +
        std::to_string(cfg.reference_cell_count) + " cells): 4G " +
        format_fixed(net4, 0) + " t, 3G " + format_fixed(net3, 0) + " t\n";

  bundle.files.push_back({"summary.md", std::move(md)});
  return bundle;
}

}  // namespace cellecon
