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

#include "cost.hpp"

#include <cmath>

namespace cellecon {

double spectrum_cost_per_cell(const CapexParams& c, int loan_years) {
  c.validate();
  if (loan_years < 1) throw domain_error("loan period must be >= 1 year");
  return c.total_spectrum_gbp / (static_cast<double>(loan_years) * c.network_cell_count);
}

double capex_per_cell(const CapexParams& c, int loan_years) {
  return c.cell_equipment_gbp + c.insertion_gbp + c.backhaul_install_gbp +
         spectrum_cost_per_cell(c, loan_years);
}

double annuity_payment(double capex_gbp, double interest_rate, int years,
                       AnnuityMode mode) {
  if (!(interest_rate > 0.0)) throw domain_error("interest rate must be > 0");
  if (years < 1) throw domain_error("loan period must be >= 1 year");
  const double growth = std::pow(1.0 + interest_rate, years);
  switch (mode) {
    case AnnuityMode::standard:
      return capex_gbp * interest_rate * growth / (growth - 1.0);
    case AnnuityMode::paper_appendix:
      return capex_gbp * interest_rate * growth;
  }
  throw domain_error("unknown annuity mode");
}

double opex_per_cell(const OpexParams& o, double capex_gbp,
                     double annual_energy_kwh_per_cell) {
  o.validate();
  if (annual_energy_kwh_per_cell < 0.0)
    throw domain_error("annual energy must be >= 0");
  return o.site_rent_gbp + o.backhaul_rent_gbp +
         annual_energy_kwh_per_cell * o.energy_price_gbp_per_kwh + o.maintenance_gbp +
         o.marketing_fraction * capex_gbp;
}

double total_annual_cost_per_km2(const OpexParams& o, const CapexParams& c,
                                 const Deployment& d,
                                 double annual_energy_kwh_per_cell, AnnuityMode mode) {
  d.validate();
  const double capex = capex_per_cell(c, o.loan_years);
  const double repayment =
      o.amortize_capex ? annuity_payment(capex, o.interest_rate, o.loan_years, mode)
                       : 0.0;
  const double fixed_per_cell =
      opex_per_cell(o, capex, 0.0);  // energy added per km^2 below, unrounded
  const double energy_km2 = annual_energy_kwh_per_cell * d.cells_per_km2;
  return d.cells_per_km2 * (repayment + fixed_per_cell) +
         energy_km2 * o.energy_price_gbp_per_kwh;
}

std::vector<OpexRow> opex_sweep(const OpexParams& o, const CapexParams& c,
                                const PowerParams& p, const Deployment& d,
                                const std::vector<double>& demands_mbps_km2,
                                double cell_capacity_mbps, AnnuityMode mode,
                                std::optional<double> load_basis_capacity,
                                int hours_per_day, int days_per_year) {
  o.validate();
  const auto power_rows =
      power_sweep(p, d, demands_mbps_km2, cell_capacity_mbps, load_basis_capacity);
  const double capex = capex_per_cell(c, o.loan_years);
  const double repayment =
      o.amortize_capex ? annuity_payment(capex, o.interest_rate, o.loan_years, mode)
                       : 0.0;
  std::vector<OpexRow> rows;
  rows.reserve(demands_mbps_km2.size());
  for (const auto& power_row : power_rows) {
    const double demand = power_row.demand_mbps_km2;
    const double energy_cell =
        annual_energy_per_cell_kwh(power_row.p_km2_kw, d, hours_per_day,
                                   days_per_year);
    OpexRow row;
    row.demand_mbps_km2 = demand;
    row.energy_kwh_per_cell = energy_cell;
    row.electricity_per_cell_gbp = energy_cell * o.energy_price_gbp_per_kwh;
    row.electricity_km2_gbp =
        energy_cell * d.cells_per_km2 * o.energy_price_gbp_per_kwh;
    row.backhaul_rent_gbp = o.backhaul_rent_gbp;
    row.site_rent_gbp = o.site_rent_gbp;
    row.maintenance_gbp = o.maintenance_gbp;
    row.marketing_gbp = o.marketing_fraction * capex;
    row.capex_per_cell_gbp = o.amortize_capex ? capex : 0.0;
    row.capex_repayment_gbp = repayment;
    row.total_km2_gbp = total_annual_cost_per_km2(o, c, d, energy_cell, mode);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cellecon
