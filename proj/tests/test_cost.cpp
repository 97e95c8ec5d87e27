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

#include <doctest.h>

#include "core/config.hpp"
#include "core/report.hpp"

using namespace cellecon;

namespace {

// Published annual totals per km2 over the demand grid 5,10,20..190.
const std::vector<double> kTotalsLte = {
    195152.00, 195296.72, 195501.39, 195658.44, 195790.84, 195907.48, 196012.94,
    196109.92, 196200.18, 196284.96, 196365.14, 196441.41, 196514.28, 196584.17,
    196651.42, 196716.32, 196779.08, 196839.91, 196898.97, 196956.42};
const std::vector<double> kTotalsHspa = {
    294773.16, 295169.58, 295730.20, 296160.38, 296523.03, 296842.54, 297131.40,
    297397.03, 297644.27, 297876.49, 298096.13, 298305.03, 298504.63, 298696.08,
    298880.29, 299058.04, 299229.95, 299396.57, 299558.35, 299715.70};

}  // namespace

TEST_CASE("spectrum cost per cell") {
  const CapexParams capex;
  CHECK(spectrum_cost_per_cell(capex, 12) == doctest::Approx(3295.0).epsilon(1e-12));
  CapexParams doubled = capex;
  doubled.network_cell_count *= 2;
  CHECK(spectrum_cost_per_cell(doubled, 12) ==
        doctest::Approx(3295.0 / 2.0).epsilon(1e-12));
  CapexParams free = capex;
  free.total_spectrum_gbp = 0.0;
  CHECK(spectrum_cost_per_cell(free, 12) == 0.0);
  CapexParams bad = capex;
  bad.network_cell_count = 0;
  CHECK_THROWS_AS(spectrum_cost_per_cell(bad, 12), domain_error);
}

TEST_CASE("capex per cell") {
  CHECK(capex_per_cell(CapexParams{}, 12) == doctest::Approx(139795.0).epsilon(1e-12));
  CapexParams zero;
  zero.cell_equipment_gbp = zero.insertion_gbp = zero.backhaul_install_gbp = 0.0;
  zero.total_spectrum_gbp = 0.0;
  CHECK(capex_per_cell(zero, 12) == 0.0);
  CapexParams no_spectrum;
  no_spectrum.total_spectrum_gbp = 0.0;
  CHECK(capex_per_cell(no_spectrum, 12) == doctest::Approx(136500.0));
}

TEST_CASE("annuity payment") {
  const double capex = 139795.0;
  const double standard = annuity_payment(capex, 0.05, 12, AnnuityMode::standard);
  const double printed_mode =
      annuity_payment(capex, 0.05, 12, AnnuityMode::paper_appendix);
  CHECK(std::abs(standard - 15773.0) <= 1.0);
  CHECK(std::abs(printed_mode - 12553.0) <= 1.0);
  CHECK(annuity_payment(0.0, 0.05, 12, AnnuityMode::standard) == 0.0);
  CHECK(annuity_payment(0.0, 0.05, 12, AnnuityMode::paper_appendix) == 0.0);
  CHECK_THROWS_AS(annuity_payment(capex, 0.0, 12, AnnuityMode::standard),
                  domain_error);
  CHECK_THROWS_AS(annuity_payment(capex, 0.05, 0, AnnuityMode::standard),
                  domain_error);

  SUBCASE("standard mode satisfies the closed-form identity") {
    const double i = 0.05;
    const double growth = std::pow(1.05, 12);
    CHECK(standard * (growth - 1.0) / (i * growth) ==
          doctest::Approx(capex).epsilon(1e-6));
  }
}

TEST_CASE("recurring cost per cell") {
  const OpexParams opex;
  const double capex = capex_per_cell(CapexParams{}, opex.loan_years);

  SUBCASE("marketing share of the build-out") {
    CHECK(opex.marketing_fraction * capex == doctest::Approx(3257.22).epsilon(1e-4));
    CHECK(std::llround(opex.marketing_fraction * capex) == 3257);
  }

  SUBCASE("electricity term") {
    OpexParams energy_only;
    energy_only.site_rent_gbp = energy_only.backhaul_rent_gbp = 0.0;
    energy_only.maintenance_gbp = 0.0;
    energy_only.marketing_fraction = 0.0;
    CHECK(opex_per_cell(energy_only, 0.0, 8536.0) ==
          doctest::Approx(1195.04).epsilon(1e-6));
  }

  SUBCASE("all-zero monetary parameters cost nothing") {
    OpexParams zero;
    zero.site_rent_gbp = zero.backhaul_rent_gbp = zero.maintenance_gbp = 0.0;
    zero.energy_price_gbp_per_kwh = 0.0;
    zero.marketing_fraction = 0.0;
    CHECK(opex_per_cell(zero, 0.0, 123.0) == 0.0);
  }

  SUBCASE("affine in energy with slope equal to the tariff") {
    const double base = opex_per_cell(opex, capex, 1000.0);
    const double more = opex_per_cell(opex, capex, 1001.0);
    CHECK(more - base ==
          doctest::Approx(opex.energy_price_gbp_per_kwh).epsilon(1e-9));
  }

  CHECK_THROWS_AS(opex_per_cell(opex, capex, -1.0), domain_error);
}

TEST_CASE("annual totals per km2") {
  const ScenarioConfig cfg = default_config();

  SUBCASE("published totals reproduce within six percent") {
    for (std::size_t i = 0; i < cfg.demand_grid_mbps.size(); ++i) {
      const double demand = cfg.demand_grid_mbps[i];
      const double lte = annual_cost_per_km2(cfg, Technology::lte_4g, demand);
      const double hspa = annual_cost_per_km2(cfg, Technology::hspa_3g, demand);
      CHECK(std::abs(lte - kTotalsLte[i]) / kTotalsLte[i] < 0.06);
      CHECK(std::abs(hspa - kTotalsHspa[i]) / kTotalsHspa[i] < 0.06);
    }
  }

  SUBCASE("frozen baseline values") {
    CHECK(annual_cost_per_km2(cfg, Technology::lte_4g, 5.0) ==
          doctest::Approx(195078.41).epsilon(1e-6));
    CHECK(annual_cost_per_km2(cfg, Technology::hspa_3g, 5.0) ==
          doctest::Approx(289895.86).epsilon(1e-6));
  }

  SUBCASE("cost ratio and demand sensitivity") {
    const double lte5 = annual_cost_per_km2(cfg, Technology::lte_4g, 5.0);
    const double hspa5 = annual_cost_per_km2(cfg, Technology::hspa_3g, 5.0);
    CHECK(std::abs(lte5 / hspa5 - 0.66) < 0.04);

    const double lte190 = annual_cost_per_km2(cfg, Technology::lte_4g, 190.0);
    CHECK(lte190 - lte5 == doctest::Approx(1804.0).epsilon(0.15));
  }

  SUBCASE("strictly increasing in demand") {
    double prev = 0.0;
    for (double demand : cfg.demand_grid_mbps) {
      const double cur = annual_cost_per_km2(cfg, Technology::lte_4g, demand);
      CHECK(cur > prev);
      prev = cur;
    }
  }

  SUBCASE("all-zero monetary parameters cost exactly nothing") {
    CapexParams free_capex;
    free_capex.cell_equipment_gbp = free_capex.insertion_gbp = 0.0;
    free_capex.backhaul_install_gbp = free_capex.total_spectrum_gbp = 0.0;
    OpexParams free_opex;
    free_opex.site_rent_gbp = free_opex.backhaul_rent_gbp = 0.0;
    free_opex.maintenance_gbp = free_opex.energy_price_gbp_per_kwh = 0.0;
    free_opex.marketing_fraction = 0.0;
    Deployment d;
    d.cells_per_km2 = 4.6;
    CHECK(total_annual_cost_per_km2(free_opex, free_capex, d, 9999.0,
                                    AnnuityMode::standard) == 0.0);
    CHECK(total_annual_cost_per_km2(free_opex, free_capex, d, 9999.0,
                                    AnnuityMode::paper_appendix) == 0.0);
  }

  SUBCASE("linear in deployment density at fixed per-cell values") {
    const OpexParams opex;
    const CapexParams capex;
    Deployment d;
    d.cells_per_km2 = 5.0;
    const double one =
        total_annual_cost_per_km2(opex, capex, d, 1000.0, AnnuityMode::standard);
    d.cells_per_km2 = 10.0;
    const double two =
        total_annual_cost_per_km2(opex, capex, d, 1000.0, AnnuityMode::standard);
    CHECK(two == doctest::Approx(2.0 * one).epsilon(1e-12));
  }

  SUBCASE("the two annuity conventions move only the repayment term") {
    ScenarioConfig paper_mode = cfg;
    paper_mode.annuity_mode = AnnuityMode::paper_appendix;
    const double std_total = annual_cost_per_km2(cfg, Technology::lte_4g, 5.0);
    const double paper_total =
        annual_cost_per_km2(paper_mode, Technology::lte_4g, 5.0);
    const double capex = capex_per_cell(cfg.capex, cfg.opex.loan_years);
    const double delta =
        annuity_payment(capex, cfg.opex.interest_rate, cfg.opex.loan_years,
                        AnnuityMode::standard) -
        annuity_payment(capex, cfg.opex.interest_rate, cfg.opex.loan_years,
                        AnnuityMode::paper_appendix);
    CHECK(std_total - paper_total ==
          doctest::Approx(cfg.lte.deployment.cells_per_km2 * delta).epsilon(1e-9));
    // The repaid-network costs are annuity-free either way.
    CHECK(annual_cost_per_km2(cfg, Technology::hspa_3g, 5.0) ==
          doctest::Approx(annual_cost_per_km2(paper_mode, Technology::hspa_3g, 5.0))
              .epsilon(1e-12));
  }
}

TEST_CASE("cost breakdown sweep") {
  const ScenarioConfig cfg = default_config();
  const auto rows =
      opex_sweep(cfg.opex, cfg.capex, cfg.power, cfg.lte.deployment,
                 cfg.demand_grid_mbps, cfg.lte.cell_capacity_mbps(),
                 AnnuityMode::standard);
  REQUIRE(rows.size() == 20);
  CHECK(rows.front().capex_per_cell_gbp == doctest::Approx(139795.0));
  CHECK(rows.front().marketing_gbp == doctest::Approx(3257.22).epsilon(1e-4));
  CHECK(rows.front().backhaul_rent_gbp == 7500.0);
  CHECK(rows.front().site_rent_gbp == 10800.0);
  CHECK(rows.front().maintenance_gbp == 3900.0);
  // Total equals the component sum with electricity taken per km2.
  for (const auto& row : rows) {
    const double per_cell = row.capex_repayment_gbp + row.site_rent_gbp +
                            row.backhaul_rent_gbp + row.maintenance_gbp +
                            row.marketing_gbp;
    CHECK(row.total_km2_gbp ==
          doctest::Approx(cfg.lte.deployment.cells_per_km2 * per_cell +
                          row.electricity_km2_gbp)
              .epsilon(1e-9));
  }

  SUBCASE("single-point sweep") {
    const auto one = opex_sweep(cfg.opex, cfg.capex, cfg.power, cfg.lte.deployment,
                                {5.0}, cfg.lte.cell_capacity_mbps(),
                                AnnuityMode::standard);
    CHECK(one.size() == 1);
    CHECK(one[0].total_km2_gbp == doctest::Approx(rows[0].total_km2_gbp));
  }

  SUBCASE("overload propagates") {
    CHECK_THROWS_AS(opex_sweep(cfg.opex, cfg.capex, cfg.power, cfg.lte.deployment,
                               {240.0}, cfg.lte.cell_capacity_mbps(),
                               AnnuityMode::standard),
                    overload_error);
  }
}
