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

#ifndef CELLECON_CORE_PROFIT_HPP
#define CELLECON_CORE_PROFIT_HPP

#include <functional>
#include <vector>

#include "tariff.hpp"

namespace cellecon {

/// Split of the user base between the two technologies over a demand grid.
struct UptakeScenario {
  double uptake_fraction_4g = 0.0;   // the 3G share is the complement
  double user_density_per_km2 = 3000.0;
  std::vector<double> demand_grid_mbps;

  void validate() const {
    if (uptake_fraction_4g < 0.0 || uptake_fraction_4g > 1.0)
      throw domain_error("uptake_fraction_4g must lie in [0, 1]");
    if (!(user_density_per_km2 > 0.0))
      throw domain_error("user density must be > 0");
  }
};

/// Converts a sustained per-subscriber rate into a monthly volume. Users are
/// assumed active half the day; k_f maps Mbit to GB and is deliberately
/// selectable between 1/1024 (reproduces the published tables) and 1/8192
/// (the literal Mbit-to-GB factor).
struct UsageConversion {
  double active_hours_per_day = 12.0;
  double days_per_month = 30.0;
  double seconds_per_hour = 3600.0;
  double k_f = 1.0 / 1024.0;

  void validate() const {
    if (k_f != 1.0 / 1024.0 && k_f != 1.0 / 8192.0)
      throw domain_error("k_f must be 1/1024 or 1/8192");
    if (!(active_hours_per_day > 0.0) || !(days_per_month > 0.0) ||
        !(seconds_per_hour > 0.0))
      throw domain_error("usage conversion constants must be > 0");
  }
};

struct ProfitRow {
  Technology technology = Technology::lte_4g;
  double uptake_fraction = 0.0;
  double demand_mbps_km2 = 0.0;
  long subscribers_per_km2 = 0;
  double rate_mbps_per_sub = 0.0;
  double usage_mb_per_month = 0.0;
  double usage_gb_per_month = 0.0;
  TariffLevel tariff;
  double charge_gbp_per_month = 0.0;
  double annual_revenue_gbp = 0.0;
  double annual_cost_gbp = 0.0;
  double profit_gbp = 0.0;
};

/// 4G and 3G rows for one demand point plus their combined profit.
struct ProfitPair {
  ProfitRow lte;
  ProfitRow hspa;
  double total_profit_gbp = 0.0;
};

/// Everything the sweep needs per technology: a fitted tariff surface and
/// the annual cost per km^2 as a function of demanded traffic (either the
/// cost model or an override table read from file).
struct TechEconomics {
  RegressionCoefficients tariff;
  std::function<double(double demand_mbps_km2)> annual_cost_per_km2;
};

long subscribers(double uptake_fraction, double user_density_per_km2);
double per_subscriber_rate_mbps(double demand_mbps_km2, long subscribers_per_km2);
double monthly_usage_gb(double rate_mbps, const UsageConversion& conv);
double annual_revenue_gbp(double charge_gbp_per_month, long subscribers_per_km2);
double profit_gbp(double revenue_gbp, double cost_gbp);

/// One 4G/3G pair per demand point, ordered by the grid. A technology with
/// zero subscribers is skipped (its row carries zeros).
std::vector<ProfitPair> profit_sweep(const UptakeScenario& scenario,
                                     const TechEconomics& lte,
                                     const TechEconomics& hspa,
                                     const UsageConversion& conv,
                                     const NormalizationRules& rules);

}  // namespace cellecon

#endif  // CELLECON_CORE_PROFIT_HPP
