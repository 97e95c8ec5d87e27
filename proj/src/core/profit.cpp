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

#include "profit.hpp"

#include <cmath>

namespace cellecon {

long subscribers(double uptake_fraction, double user_density_per_km2) {
  if (uptake_fraction < 0.0 || uptake_fraction > 1.0)
    throw domain_error("uptake fraction must lie in [0, 1]");
  if (user_density_per_km2 < 0.0) throw domain_error("user density must be >= 0");
  return std::lround(uptake_fraction * user_density_per_km2);
}

double per_subscriber_rate_mbps(double demand_mbps_km2, long subscribers_per_km2) {
  if (subscribers_per_km2 < 1)
    throw domain_error("per-subscriber rate needs at least one subscriber");
  if (demand_mbps_km2 < 0.0) throw domain_error("traffic demand must be >= 0");
  return demand_mbps_km2 / static_cast<double>(subscribers_per_km2);
}

double monthly_usage_gb(double rate_mbps, const UsageConversion& conv) {
  conv.validate();
  if (rate_mbps < 0.0) throw domain_error("per-subscriber rate must be >= 0");
  return rate_mbps * conv.seconds_per_hour * conv.active_hours_per_day *
         conv.days_per_month * conv.k_f;
}

double annual_revenue_gbp(double charge_gbp_per_month, long subscribers_per_km2) {
  if (charge_gbp_per_month < 0.0 || subscribers_per_km2 < 0)
    throw domain_error("revenue needs non-negative inputs");
  return charge_gbp_per_month * static_cast<double>(subscribers_per_km2) * 12.0;
}

double profit_gbp(double revenue_gbp, double cost_gbp) {
  return revenue_gbp - cost_gbp;
}

namespace {

ProfitRow sweep_row(Technology tech, double uptake, double demand, double density,
                    const TechEconomics& econ, const UsageConversion& conv,
                    const NormalizationRules& rules) {
  ProfitRow row;
  row.technology = tech;
  row.uptake_fraction = uptake;
  row.demand_mbps_km2 = demand;
  row.subscribers_per_km2 = subscribers(uptake, density);
  if (row.subscribers_per_km2 == 0) return row;  // technology not in play

  row.rate_mbps_per_sub = per_subscriber_rate_mbps(demand, row.subscribers_per_km2);
  row.usage_mb_per_month = row.rate_mbps_per_sub * conv.seconds_per_hour *
                           conv.active_hours_per_day * conv.days_per_month;
  row.usage_gb_per_month = row.usage_mb_per_month * conv.k_f;
  row.tariff = select_tariff(row.usage_gb_per_month);
  row.charge_gbp_per_month = tariff_charge(econ.tariff, row.tariff, rules);
  row.annual_revenue_gbp =
      annual_revenue_gbp(row.charge_gbp_per_month, row.subscribers_per_km2);
  row.annual_cost_gbp = econ.annual_cost_per_km2(demand);
  row.profit_gbp = profit_gbp(row.annual_revenue_gbp, row.annual_cost_gbp);
  return row;
}

}  // namespace

std::vector<ProfitPair> profit_sweep(const UptakeScenario& scenario,
                                     const TechEconomics& lte,
                                     const TechEconomics& hspa,
                                     const UsageConversion& conv,
                                     const NormalizationRules& rules) {
  scenario.validate();
  conv.validate();
  std::vector<ProfitPair> pairs;
  pairs.reserve(scenario.demand_grid_mbps.size());
  const double f = scenario.uptake_fraction_4g;
  for (double demand : scenario.demand_grid_mbps) {
    ProfitPair pair;
    pair.lte = sweep_row(Technology::lte_4g, f, demand,
                         scenario.user_density_per_km2, lte, conv, rules);
    pair.hspa = sweep_row(Technology::hspa_3g, 1.0 - f, demand,
                          scenario.user_density_per_km2, hspa, conv, rules);
    pair.total_profit_gbp = pair.lte.profit_gbp + pair.hspa.profit_gbp;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace cellecon
