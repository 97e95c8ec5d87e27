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

#ifndef CELLECON_CORE_COST_HPP
#define CELLECON_CORE_COST_HPP

#include <vector>

#include "power.hpp"

namespace cellecon {

/// One-off expenditure per cell plus the network-wide spectrum purchase that
/// is spread over the loan period and the whole fleet.
struct CapexParams {
  double cell_equipment_gbp = 28000.0;
  double insertion_gbp = 100000.0;
  double backhaul_install_gbp = 8500.0;
  double total_spectrum_gbp = 790.8e6;
  long network_cell_count = 20000;

  void validate() const {
    if (cell_equipment_gbp < 0 || insertion_gbp < 0 || backhaul_install_gbp < 0 ||
        total_spectrum_gbp < 0)
      throw domain_error("capex components must be >= 0");
    if (network_cell_count < 1) throw domain_error("network cell count must be >= 1");
  }
};

/// Recurring per-cell expenditure and the loan terms used to annualize CAPEX.
struct OpexParams {
  double site_rent_gbp = 10800.0;
  double backhaul_rent_gbp = 7500.0;
  double energy_price_gbp_per_kwh = 0.14;
  double maintenance_gbp = 3900.0;
  double marketing_fraction = 0.0233;  // alpha, applied to CAPEX
  double interest_rate = 0.05;
  int loan_years = 12;
  bool amortize_capex = true;  // false for a network whose CAPEX is repaid

  void validate() const {
    if (site_rent_gbp < 0 || backhaul_rent_gbp < 0 || maintenance_gbp < 0 ||
        energy_price_gbp_per_kwh < 0)
      throw domain_error("opex components must be >= 0");
    if (marketing_fraction < 0.0 || marketing_fraction >= 1.0)
      throw domain_error("marketing fraction must lie in [0, 1)");
    if (!(interest_rate > 0.0) || interest_rate >= 1.0)
      throw domain_error("interest rate must lie in (0, 1)");
    if (loan_years < 1) throw domain_error("loan period must be >= 1 year");
  }
};

/// The source material prints a CAPEX repayment equal to capex*i*(1+i)^Y,
/// which is not the textbook annuity; both factors are kept selectable so the
/// published tables and an honest amortization are each reproducible.
enum class AnnuityMode { standard, paper_appendix };

struct OpexRow {
  double demand_mbps_km2 = 0.0;
  double energy_kwh_per_cell = 0.0;
  double electricity_km2_gbp = 0.0;
  double electricity_per_cell_gbp = 0.0;
  double backhaul_rent_gbp = 0.0;
  double site_rent_gbp = 0.0;
  double maintenance_gbp = 0.0;
  double marketing_gbp = 0.0;
  double capex_per_cell_gbp = 0.0;
  double capex_repayment_gbp = 0.0;
  double total_km2_gbp = 0.0;
};

/// Network spectrum outlay divided across the loan years and the fleet.
double spectrum_cost_per_cell(const CapexParams& c, int loan_years);

/// Equipment + insertion + backhaul install + per-cell spectrum.
double capex_per_cell(const CapexParams& c, int loan_years);

/// Annual repayment of `capex_gbp` over `years` at rate `i`.
double annuity_payment(double capex_gbp, double interest_rate, int years,
                       AnnuityMode mode);

/// Recurring cost per cell: rents, energy, maintenance and the marketing
/// share of CAPEX. The loan repayment is layered on separately.
double opex_per_cell(const OpexParams& o, double capex_gbp,
                     double annual_energy_kwh_per_cell);

/// Annual cost of the deployment per km^2: density * (repayment + opex),
/// with the electricity term taken from the per-km^2 energy directly.
double total_annual_cost_per_km2(const OpexParams& o, const CapexParams& c,
                                 const Deployment& d,
                                 double annual_energy_kwh_per_cell, AnnuityMode mode);

/// Cost breakdown rows over a demand grid for one technology. The optional
/// load basis mirrors power_sweep's shared-load-column convention.
std::vector<OpexRow> opex_sweep(const OpexParams& o, const CapexParams& c,
                                const PowerParams& p, const Deployment& d,
                                const std::vector<double>& demands_mbps_km2,
                                double cell_capacity_mbps, AnnuityMode mode,
                                std::optional<double> load_basis_capacity = {},
                                int hours_per_day = 24, int days_per_year = 365);

}  // namespace cellecon

#endif  // CELLECON_CORE_COST_HPP
