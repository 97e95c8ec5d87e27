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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "core/power.hpp"

using namespace cellecon;

namespace {

const std::vector<double> kDemandGrid = {0,  5,   10,  20,  30,  40,  50,
                                         60, 70,  80,  90,  100, 110, 120,
                                         130, 140, 150, 160, 170, 180, 190};

// Published per-cell draw over the shared load column (identical for both
// deployments) and the per-km2 totals at 4.6 and 12.4 cells/km2.
const std::vector<double> kCellW = {900.00,  961.10,  986.41,  1022.21, 1049.67,
                                    1072.83, 1093.23, 1111.67, 1128.63, 1144.42,
                                    1159.24, 1173.27, 1186.60, 1199.35, 1211.57,
                                    1223.33, 1234.68, 1245.66, 1256.30, 1266.63,
                                    1276.67};
const std::vector<double> kKm2Lte = {4.14, 4.42, 4.54, 4.70, 4.83, 4.94, 5.03,
                                     5.11, 5.19, 5.26, 5.33, 5.40, 5.46, 5.52,
                                     5.57, 5.63, 5.68, 5.73, 5.78, 5.83, 5.87};
const std::vector<double> kKm2Hspa = {11.16, 11.92, 12.23, 12.68, 13.02, 13.30,
                                      13.56, 13.78, 14.00, 14.19, 14.37, 14.55,
                                      14.71, 14.87, 15.02, 15.17, 15.31, 15.45,
                                      15.58, 15.71, 15.83};

PowerParams default_power() { return PowerParams{}; }

Deployment lte_deployment() {
  Deployment d;
  d.cells_per_km2 = 4.6;
  d.capacity_cells_per_km2 = 4.62;
  d.inter_site_distance_km = 0.5;
  return d;
}

Deployment hspa_deployment() {
  Deployment d;
  d.cells_per_km2 = 12.4;
  d.inter_site_distance_km = 0.3;
  return d;
}

}  // namespace

TEST_CASE("hexagonal cell area") {
  CHECK(hex_cell_area_km2(0.50) == doctest::Approx(0.2165).epsilon(1e-3));
  CHECK(hex_cell_area_km2(0.30) == doctest::Approx(0.0779).epsilon(1e-3));
  CHECK(hex_cell_area_km2(1.00) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK_THROWS_AS(hex_cell_area_km2(0.0), domain_error);
}

TEST_CASE("deployment consistency") {
  CHECK_NOTHROW(lte_deployment().validate());
  CHECK_NOTHROW(hspa_deployment().validate());

  Deployment inconsistent;
  inconsistent.cells_per_km2 = 4.6;
  inconsistent.inter_site_distance_km = 1.0;  // hex area 0.866 vs 1/4.6
  CHECK_THROWS_AS(inconsistent.validate(), domain_error);
  inconsistent.allow_area_mismatch = true;
  CHECK_NOTHROW(inconsistent.validate());
}

TEST_CASE("cell power") {
  const PowerParams p = default_power();
  CHECK(cell_power_w(p, 0.0) == doctest::Approx(900.0));
  CHECK(cell_power_w(p, 5.0 / 198.66) == doctest::Approx(961.10).epsilon(1e-4));
  CHECK(cell_power_w(p, 190.0 / 198.66) == doctest::Approx(1276.67).epsilon(1e-4));
  CHECK_THROWS_AS(cell_power_w(p, -0.01), domain_error);
  CHECK_THROWS_AS(cell_power_w(p, 1.01), domain_error);

  SUBCASE("zero-load draw is the overhead term") {
    CHECK(cell_power_w(p, 0.0) ==
          doctest::Approx(p.n_antennas * p.overhead_plus_backhaul_w).epsilon(1e-12));
  }

  SUBCASE("strictly increasing and concave in load") {
    double prev = cell_power_w(p, 0.0);
    double prev_delta = 1e30;
    for (double load = 0.01; load <= 1.0 + 1e-12; load += 0.01) {
      const double cur = cell_power_w(p, std::min(load, 1.0));
      const double delta = cur - prev;
      CHECK(cur > prev);
      CHECK(delta <= prev_delta + 1e-9);  // second difference <= 0
      prev = cur;
      prev_delta = delta;
    }
  }
}

TEST_CASE("area capacity") {
  CHECK(area_capacity_mbps_km2(lte_deployment(), 43.0) ==
        doctest::Approx(198.66).epsilon(1e-6));
  CHECK(area_capacity_mbps_km2(hspa_deployment(), 16.0) ==
        doctest::Approx(198.40).epsilon(1e-6));
  CHECK(area_capacity_mbps_km2(hspa_deployment(), 0.0) == 0.0);
}

TEST_CASE("area power") {
  const PowerParams p = default_power();
  const Deployment lte = lte_deployment();
  const Deployment hspa = hspa_deployment();

  CHECK(area_power_kw(p, lte, TrafficPoint{5.0}, 198.66) ==
        doctest::Approx(4.42).epsilon(1e-3));
  CHECK(area_power_kw(p, lte, TrafficPoint{0.0}, 198.66) ==
        doctest::Approx(4.14).epsilon(1e-3));
  CHECK(area_power_kw(p, hspa, TrafficPoint{90.0}, 198.66) ==
        doctest::Approx(14.37).epsilon(1e-3));

  SUBCASE("overload is an error, not a clamp") {
    try {
      area_power_kw(p, lte, TrafficPoint{200.0}, 198.66);
      FAIL("expected overload_error");
    } catch (const overload_error& e) {
      CHECK(e.demand_mbps_km2 == doctest::Approx(200.0));
      CHECK(e.capacity_mbps_km2 == doctest::Approx(198.66));
    }
  }

  SUBCASE("linear in deployment density at fixed load") {
    Deployment doubled = lte;
    doubled.cells_per_km2 *= 2.0;
    doubled.capacity_cells_per_km2.reset();
    doubled.inter_site_distance_km.reset();
    CHECK(area_power_kw(p, doubled, TrafficPoint{50.0}, 198.66) ==
          doctest::Approx(2.0 * area_power_kw(p, lte, TrafficPoint{50.0}, 198.66))
              .epsilon(1e-12));
  }
}

TEST_CASE("annual energy per cell") {
  const Deployment lte = lte_deployment();
  CHECK(annual_energy_per_cell_kwh(0.0, lte) == 0.0);
  // The published annual figures at full demand, per km2.
  const double pkw4 = area_power_kw(default_power(), lte, TrafficPoint{190.0}, 198.66);
  CHECK(pkw4 * 24 * 365 == doctest::Approx(51445.0).epsilon(0.01));
  const double pkw3 = area_power_kw(default_power(), hspa_deployment(),
                                    TrafficPoint{190.0}, 198.66);
  CHECK(pkw3 * 24 * 365 == doctest::Approx(138677.0).epsilon(0.01));
  CHECK_THROWS_AS(annual_energy_per_cell_kwh(-1.0, lte), domain_error);
  CHECK_THROWS_AS(annual_energy_per_cell_kwh(1.0, lte, 0, 365), domain_error);
}

TEST_CASE("power sweep reproduces the published tables") {
  const PowerParams p = default_power();
  const auto lte_rows = power_sweep(p, lte_deployment(), kDemandGrid, 43.0);
  const auto hspa_rows =
      power_sweep(p, hspa_deployment(), kDemandGrid, 16.0, 198.66);
  REQUIRE(lte_rows.size() == 21);
  REQUIRE(hspa_rows.size() == 21);

  for (std::size_t i = 0; i < kDemandGrid.size(); ++i) {
    CHECK(std::abs(lte_rows[i].p_cell_w - kCellW[i]) <= 0.05);
    CHECK(std::abs(hspa_rows[i].p_cell_w - kCellW[i]) <= 0.05);
    CHECK(std::abs(lte_rows[i].p_km2_kw - kKm2Lte[i]) <= 0.01);
    CHECK(std::abs(hspa_rows[i].p_km2_kw - kKm2Hspa[i]) <= 0.01);
    // The two deployments share one load column: identical per-cell draw.
    CHECK(std::abs(lte_rows[i].p_cell_w - hspa_rows[i].p_cell_w) <= 0.05);
  }

  SUBCASE("ordering and emptiness") {
    CHECK(power_sweep(p, lte_deployment(), {}, 43.0).empty());
    const auto reversed =
        power_sweep(p, lte_deployment(), {190.0, 5.0}, 43.0);
    CHECK(reversed[0].demand_mbps_km2 == 190.0);
    CHECK(reversed[1].demand_mbps_km2 == 5.0);
  }

  SUBCASE("overload propagates") {
    CHECK_THROWS_AS(power_sweep(p, lte_deployment(), {500.0}, 43.0),
                    overload_error);
  }
}
