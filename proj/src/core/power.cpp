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

#include "power.hpp"

#include <algorithm>

namespace cellecon {

void Deployment::validate() const {
  if (!(cells_per_km2 > 0.0)) throw domain_error("cells_per_km2 must be > 0");
  if (capacity_cells_per_km2 && !(*capacity_cells_per_km2 > 0.0))
    throw domain_error("capacity_cells_per_km2 must be > 0");
  if (inter_site_distance_km && !allow_area_mismatch) {
    const double area = hex_cell_area_km2(*inter_site_distance_km);
    const double implied = 1.0 / cells_per_km2;
    if (std::abs(area - implied) > 0.05 * implied)
      throw domain_error(
          "hexagonal area from the inter-site distance disagrees with "
          "1/cells_per_km2 by more than 5%; set allow_area_mismatch to keep both");
  }
}

double hex_cell_area_km2(double isd_km) {
  if (!(isd_km > 0.0)) throw domain_error("inter-site distance must be > 0");
  return std::sqrt(3.0) / 2.0 * isd_km * isd_km;
}

double cell_power_w(const PowerParams& p, double load) {
  p.validate();
  if (load < 0.0 || load > 1.0) throw domain_error("cell load must lie in [0, 1]");
  return p.n_antennas * (p.p_transmit_w / p.radio_head_efficiency * std::sqrt(load) +
                         p.overhead_plus_backhaul_w);
}

double area_capacity_mbps_km2(const Deployment& d, double cell_capacity_mbps) {
  d.validate();
  if (cell_capacity_mbps < 0.0) throw domain_error("cell capacity must be >= 0");
  return d.capacity_density() * cell_capacity_mbps;
}

double area_power_kw(const PowerParams& p, const Deployment& d, const TrafficPoint& t,
                     double area_capacity_mbps_km2) {
  d.validate();
  if (t.demand_mbps_per_km2 < 0.0) throw domain_error("traffic demand must be >= 0");
  if (t.demand_mbps_per_km2 > area_capacity_mbps_km2)
    throw overload_error(t.demand_mbps_per_km2, area_capacity_mbps_km2);
  const double load = area_capacity_mbps_km2 > 0.0
                          ? t.demand_mbps_per_km2 / area_capacity_mbps_km2
                          : 0.0;
  return d.cells_per_km2 * cell_power_w(p, load) / 1000.0;
}

double annual_energy_per_cell_kwh(double area_power_kw, const Deployment& d,
                                  int hours_per_day, int days_per_year) {
  d.validate();
  if (area_power_kw < 0.0) throw domain_error("area power must be >= 0");
  if (hours_per_day < 1 || days_per_year < 1)
    throw domain_error("hours and days must be >= 1");
  return area_power_kw * hours_per_day * days_per_year / d.cells_per_km2;
}

std::vector<PowerRow> power_sweep(const PowerParams& p, const Deployment& d,
                                  const std::vector<double>& demands_mbps_km2,
                                  double cell_capacity_mbps,
                                  std::optional<double> load_basis_capacity) {
  const double own = area_capacity_mbps_km2(d, cell_capacity_mbps);
  const double basis = load_basis_capacity.value_or(own);
  if (!(basis > 0.0)) throw domain_error("load basis capacity must be > 0");
  std::vector<PowerRow> rows;
  rows.reserve(demands_mbps_km2.size());
  for (double demand : demands_mbps_km2) {
    if (demand < 0.0) throw domain_error("traffic demand must be >= 0");
    if (demand > own) throw overload_error(demand, own);
    PowerRow row;
    row.demand_mbps_km2 = demand;
    row.load = std::min(demand / basis, 1.0);
    row.p_cell_w = cell_power_w(p, row.load);
    row.p_km2_kw = d.cells_per_km2 * row.p_cell_w / 1000.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cellecon
