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

#ifndef CELLECON_CORE_EMISSIONS_HPP
#define CELLECON_CORE_EMISSIONS_HPP

#include <string>
#include <vector>

#include "power.hpp"
#include "tariff.hpp"

namespace cellecon {

/// Share-weighted set of generation sources and their CO2 intensities.
struct FuelShare {
  std::string fuel;
  double share = 0.0;         // fraction of generated electricity
  double g_per_kwh = 0.0;     // grams of CO2 per kWh
};

struct FuelMix {
  std::vector<FuelShare> entries;

  void validate() const;
  static FuelMix uk_default();
  static FuelMix from_csv(const std::string& csv_text);
};

struct EmissionReport {
  std::vector<std::pair<std::string, double>> per_fuel_tonnes;
  double total_tonnes = 0.0;
};

/// CO2 tonnage of one fuel's share of the energy: kWh * share * g/kWh / 1e6.
double fuel_emission_tonnes(double annual_energy_kwh, double share,
                            double intensity_g_per_kwh);

/// Per-fuel breakdown and total for the given annual energy.
EmissionReport total_emissions(double annual_energy_kwh, const FuelMix& mix);

/// Mix-averaged intensity in g/kWh; total_emissions factors through this.
double weighted_intensity(const FuelMix& mix);

/// Fleet-level tonnage from a per-km^2 report. The reference count describes
/// the existing 3G fleet; a 4G network serving the same footprint needs only
/// the deployment-density ratio of that fleet, so the count is rescaled by
/// cells4g/cells3g for 4G.
double network_emissions_tonnes(const EmissionReport& per_km2, long reference_cell_count,
                                const Deployment& d3g, const Deployment& d4g,
                                Technology tech);

}  // namespace cellecon

#endif  // CELLECON_CORE_EMISSIONS_HPP
