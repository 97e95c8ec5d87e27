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

#include "emissions.hpp"

#include <cmath>

#include "csv.hpp"

namespace cellecon {

void FuelMix::validate() const {
  if (entries.empty()) throw domain_error("fuel mix must not be empty");
  double sum = 0.0;
  for (const auto& e : entries) {
    if (e.share < 0.0) throw domain_error("fuel share must be >= 0");
    if (e.g_per_kwh < 0.0) throw domain_error("fuel intensity must be >= 0");
    sum += e.share;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw domain_error("fuel shares must sum to 1 (got " + std::to_string(sum) + ")");
}

FuelMix FuelMix::uk_default() {
  return FuelMix{{{"coal", 0.30, 960.0},
                  {"gas", 0.40, 443.0},
                  {"nuclear", 0.19, 66.0},
                  {"renewable", 0.09, 11.0},
                  {"other", 0.02, 25.0}}};
}

FuelMix FuelMix::from_csv(const std::string& csv_text) {
  const auto table = parse_csv(csv_text);
  if (table.empty() || table.front() != std::vector<std::string>{"fuel", "share",
                                                                 "g_per_kwh"})
    throw parse_error("fuel mix header must be fuel,share,g_per_kwh", 1);
  FuelMix mix;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& row = table[i];
    const long line = static_cast<long>(i) + 1;
    if (row.size() != 3) throw parse_error("expected 3 fields", line);
    try {
      mix.entries.push_back({row[0], std::stod(row[1]), std::stod(row[2])});
    } catch (const std::exception&) {
      throw parse_error("bad numeric value in fuel mix", line);
    }
  }
  mix.validate();
  return mix;
}

double fuel_emission_tonnes(double annual_energy_kwh, double share,
                            double intensity_g_per_kwh) {
  if (annual_energy_kwh < 0.0 || share < 0.0 || intensity_g_per_kwh < 0.0)
    throw domain_error("emission inputs must be >= 0");
  return annual_energy_kwh * share * intensity_g_per_kwh / 1e6;
}

EmissionReport total_emissions(double annual_energy_kwh, const FuelMix& mix) {
  mix.validate();
  EmissionReport report;
  for (const auto& e : mix.entries) {
    const double t = fuel_emission_tonnes(annual_energy_kwh, e.share, e.g_per_kwh);
    report.per_fuel_tonnes.emplace_back(e.fuel, t);
    report.total_tonnes += t;
  }
  return report;
}

double weighted_intensity(const FuelMix& mix) {
  double g = 0.0;
  for (const auto& e : mix.entries) g += e.share * e.g_per_kwh;
  return g;
}

double network_emissions_tonnes(const EmissionReport& per_km2, long reference_cell_count,
                                const Deployment& d3g, const Deployment& d4g,
                                Technology tech) {
  if (reference_cell_count < 0) throw domain_error("cell count must be >= 0");
  d3g.validate();
  d4g.validate();
  const Deployment& own = tech == Technology::lte_4g ? d4g : d3g;
  const double per_cell = per_km2.total_tonnes / own.cells_per_km2;
  double effective_count = static_cast<double>(reference_cell_count);
  if (tech == Technology::lte_4g)
    effective_count *= d4g.capacity_density() / d3g.capacity_density();
  return per_cell * effective_count;
}

}  // namespace cellecon
