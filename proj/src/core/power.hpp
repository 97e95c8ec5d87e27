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

#ifndef CELLECON_CORE_POWER_HPP
#define CELLECON_CORE_POWER_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace cellecon {

/// Per-cell electrical model: N_a transceiver chains, each drawing a
/// load-dependent radio-head term plus a constant overhead+backhaul term.
struct PowerParams {
  int n_antennas = 3;
  double p_transmit_w = 39.8;
  double radio_head_efficiency = 0.31;        // in (0, 1]
  double overhead_plus_backhaul_w = 300.0;

  void validate() const {
    if (n_antennas < 1) throw domain_error("n_antennas must be >= 1");
    if (!(p_transmit_w > 0.0)) throw domain_error("transmit power must be > 0");
    if (!(radio_head_efficiency > 0.0) || radio_head_efficiency > 1.0)
      throw domain_error("radio head efficiency must be in (0, 1]");
    if (!(overhead_plus_backhaul_w > 0.0))
      throw domain_error("overhead+backhaul power must be > 0");
  }
};

/// Hexagonal macro deployment. `cells_per_km2` drives power and cost totals;
/// `capacity_cells_per_km2`, when set, drives the area-capacity product (the
/// source tables use 4.6 and 4.62 for these two roles on the same network).
struct Deployment {
  double cells_per_km2 = 0.0;
  std::optional<double> capacity_cells_per_km2;
  std::optional<double> inter_site_distance_km;
  bool allow_area_mismatch = false;

  double capacity_density() const {
    return capacity_cells_per_km2 ? *capacity_cells_per_km2 : cells_per_km2;
  }
  void validate() const;
};

struct TrafficPoint {
  double demand_mbps_per_km2 = 0.0;
};

struct PowerRow {
  double demand_mbps_km2 = 0.0;
  double load = 0.0;
  double p_cell_w = 0.0;
  double p_km2_kw = 0.0;
};

/// Hexagon area (sqrt(3)/2) * ISD^2 in km^2.
double hex_cell_area_km2(double isd_km);

/// Cell draw N_a * (P_T/mu_RH * sqrt(load) + overhead) in watts, load in [0,1].
double cell_power_w(const PowerParams& p, double load);

/// Area capacity = capacity density * cell capacity, Mbit/s/km^2.
double area_capacity_mbps_km2(const Deployment& d, double cell_capacity_mbps);

/// Area draw in kW; demand above capacity raises overload_error.
double area_power_kw(const PowerParams& p, const Deployment& d, const TrafficPoint& t,
                     double area_capacity_mbps_km2);

/// Annual energy per cell in kWh: area power over the year divided by density.
double annual_energy_per_cell_kwh(double area_power_kw, const Deployment& d,
                                  int hours_per_day = 24, int days_per_year = 365);

/// One row per demanded rate, ordering preserved. The comparison deployments
/// are sized for equal area capacity and the published sweeps share a single
/// load column, so the load may be normalized by `load_basis_capacity`
/// instead of this deployment's own figure; overload is always judged
/// against the own figure.
std::vector<PowerRow> power_sweep(const PowerParams& p, const Deployment& d,
                                  const std::vector<double>& demands_mbps_km2,
                                  double cell_capacity_mbps,
                                  std::optional<double> load_basis_capacity = {});

}  // namespace cellecon

#endif  // CELLECON_CORE_POWER_HPP
