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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "core/builtin_data.hpp"
#include "core/csv.hpp"
#include "core/report.hpp"

using namespace cellecon;

TEST_CASE("defaults") {
  const ScenarioConfig cfg = default_config();
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.lte.s_eff_bits_per_hz == 2.14);
  CHECK(cfg.hspa.s_eff_bits_per_hz == 0.82);
  CHECK(cfg.lte.cell_capacity_mbps() == 43.0);
  CHECK(cfg.hspa.cell_capacity_mbps() == 16.0);
  CHECK(cfg.demand_grid_mbps.size() == 20);
  CHECK(cfg.power_grid_mbps().size() == 21);
  CHECK(cfg.uptake_fractions_4g.size() == 6);
  CHECK(cfg.annuity_mode == AnnuityMode::standard);

  SUBCASE("an empty document is the baseline") {
    const ScenarioConfig fromEmpty = load_config_text("", "");
    CHECK(fromEmpty.lte.deployment.cells_per_km2 == cfg.lte.deployment.cells_per_km2);
    CHECK(fromEmpty.corpus_text_3g == cfg.corpus_text_3g);
    const ScenarioConfig fromBraces = load_config_text("{}", "");
    CHECK(fromBraces.opex.site_rent_gbp == cfg.opex.site_rent_gbp);
  }
}

TEST_CASE("config parsing and validation") {
  SUBCASE("unknown keys are named") {
    try {
      load_config_text(R"({"powre": {}})", "");
      FAIL("expected config_error");
    } catch (const config_error& e) {
      CHECK(std::string(e.what()).find("powre") != std::string::npos);
    }
  }

  SUBCASE("constraint violations name the offending key") {
    try {
      load_config_text(R"({"profit": {"uptake_fractions_4g": [1.5]}})", "");
      FAIL("expected config_error");
    } catch (const config_error& e) {
      CHECK(std::string(e.what()).find("uptake_fraction_4g") != std::string::npos);
    }
  }

  SUBCASE("type mismatches are rejected") {
    CHECK_THROWS_AS(load_config_text(R"({"power": {"p_transmit_w": "39.8"}})", ""),
                    config_error);
    CHECK_THROWS_AS(load_config_text(R"({"cost": {"loan_years": 11.5}})", ""),
                    config_error);
    CHECK_THROWS_AS(load_config_text("[]", ""), config_error);
    CHECK_THROWS_AS(load_config_text("{not json", ""), config_error);
  }

  SUBCASE("an overridden energy price propagates into the cost rows") {
    const ScenarioConfig cfg =
        load_config_text(R"({"cost": {"energy_price_gbp_per_kwh": 0.20}})", "");
    const auto rows = opex_sweep(cfg.opex, cfg.capex, cfg.power, cfg.lte.deployment,
                                 {5.0}, cfg.lte.cell_capacity_mbps(),
                                 cfg.annuity_mode);
    // Recomputed by hand: 4.42 kW over a year at 0.20/kWh.
    CHECK(rows[0].electricity_km2_gbp == doctest::Approx(7745.73).epsilon(1e-4));
  }

  SUBCASE("annuity mode and conversion flags") {
    CHECK(load_config_text(R"({"cost": {"annuity_mode": "paper"}})", "").annuity_mode ==
          AnnuityMode::paper_appendix);
    CHECK(load_config_text(R"({"profit": {"kf_denominator": 8192}})", "").usage.k_f ==
          doctest::Approx(1.0 / 8192.0));
    CHECK_THROWS_AS(load_config_text(R"({"profit": {"kf_denominator": 1000}})", ""),
                    config_error);
    CHECK_THROWS_AS(load_config_text(R"({"cost": {"annuity_mode": "x"}})", ""),
                    config_error);
  }

  SUBCASE("missing corpus file is a config error") {
    CHECK_THROWS_AS(
        load_config_text(R"({"tariff": {"corpus_3g": "no/such/file.csv"}})", "/tmp"),
        config_error);
  }

  SUBCASE("an empty config file is the baseline") {
    const auto path =
        std::filesystem::temp_directory_path() / "cellecon_empty_config.json";
    std::ofstream(path, std::ios::trunc).close();
    const ScenarioConfig cfg = load_config_file(path.string());
    CHECK(cfg.lte.s_eff_bits_per_hz == 2.14);
    std::filesystem::remove(path);
  }
}

TEST_CASE("report bundle") {
  const ScenarioConfig cfg = default_config();
  const ReportBundle bundle = run_report(cfg);

  SUBCASE("the expected tables are present") {
    for (const char* name :
         {"capacity.csv", "bw_gain.csv", "power_4g.csv", "power_3g.csv",
          "energy.csv", "opex_4g.csv", "opex_3g.csv", "tariff_fit.csv",
          "profit_uptake_3pct.csv", "profit_uptake_6pct.csv",
          "profit_uptake_9pct.csv", "profit_uptake_20pct.csv",
          "profit_uptake_40pct.csv", "profit_uptake_90pct.csv", "emissions.csv",
          "summary.md"}) {
      CAPTURE(name);
      CHECK(bundle.find(name) != nullptr);
    }
    CHECK(bundle.files.size() == 16);
  }

  SUBCASE("byte-identical across runs") {
    const ReportBundle again = run_report(cfg);
    REQUIRE(again.files.size() == bundle.files.size());
    for (std::size_t i = 0; i < bundle.files.size(); ++i) {
      CHECK(bundle.files[i].name == again.files[i].name);
      CHECK(bundle.files[i].content == again.files[i].content);
    }
  }

  SUBCASE("every table parses back and re-serializes to the same bytes") {
    for (const auto& file : bundle.files) {
      if (file.name == "summary.md") continue;
      CAPTURE(file.name);
      const auto rows = parse_csv(file.content);
      REQUIRE(rows.size() >= 2);
      CsvBuilder rebuilt(rows.front());
      for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].size() == rows.front().size());
        rebuilt.add_row(rows[i]);
      }
      CHECK(rebuilt.text() == file.content);
    }
  }

  SUBCASE("published headline figures appear in the summary") {
    const NamedFile* summary = bundle.find("summary.md");
    REQUIRE(summary != nullptr);
    CHECK(summary->content.find("63% CO2 reduction") != std::string::npos);
    CHECK(summary->content.find("% OPEX reduction") != std::string::npos);
    CHECK(summary->content.find("9%") != std::string::npos);
  }

  SUBCASE("a power table carries the mandated columns") {
    const NamedFile* power = bundle.find("power_4g.csv");
    REQUIRE(power != nullptr);
    CHECK(power->content.rfind("P_T,mu_RH,R_km2,C_km2,P_OH_BH,P_cell_W,P_km2_kW\n",
                               0) == 0);
    CHECK(parse_csv(power->content).size() == 22);  // header + 21 rows
  }

  SUBCASE("an invalid scenario never reaches emission") {
    ScenarioConfig bad = cfg;
    bad.user_density_per_km2 = -1.0;
    CHECK_THROWS_AS(run_report(bad), config_error);
  }
}

TEST_CASE("builtin corpora match the shipped files") {
  for (const char* pair : {"3g", "4g"}) {
    const std::string path =
        std::string(CELLECON_DATA_DIR) + "/tariffs_" + pair + ".csv";
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    const char* builtin = pair[0] == '3' ? builtin_tariffs_3g() : builtin_tariffs_4g();
    CHECK(buf.str() == builtin);
  }
}

TEST_CASE("cost override files") {
  const auto table = load_cost_override_file(std::string(CELLECON_DATA_DIR) +
                                             "/reference_costs.csv");
  CHECK(table.size() == 40);
  CHECK(table.at({Technology::lte_4g, 5.0}) == 195152.0);
  CHECK(table.at({Technology::hspa_3g, 190.0}) == 299715.0);
  CHECK_THROWS_AS(load_cost_override("technology,demand_mbps_km2,cost_gbp\nx,5,1\n"),
                  parse_error);
  CHECK_THROWS_AS(load_cost_override("bad,header,row\n"), parse_error);
}
