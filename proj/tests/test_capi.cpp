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

#include <atomic>
#include <cmath>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include <doctest.h>

#include "cellecon.h"

namespace {

struct Config {
  cellecon_config* handle = nullptr;
  Config() { REQUIRE(cellecon_config_default(&handle) == CELLECON_OK); }
  ~Config() { cellecon_config_free(handle); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  cellecon_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("scalar entry points") {
  double out = 0.0;
  CHECK(cellecon_shannon_capacity(20e6, 3.0, &out) == CELLECON_OK);
  CHECK(out == doctest::Approx(4.0e7));
  CHECK(cellecon_shannon_capacity(-1.0, 3.0, &out) == CELLECON_ERR_DOMAIN);
  CHECK(std::strlen(cellecon_last_error()) > 0);

  CHECK(cellecon_spectral_efficiency(1.0, &out) == CELLECON_OK);
  CHECK(std::abs(out - 2.14) < 0.05);
  CHECK(cellecon_spectral_efficiency(0.5, &out) == CELLECON_ERR_DOMAIN);
  CHECK(cellecon_shannon_capacity(1.0, 1.0, nullptr) == CELLECON_ERR_ARGUMENT);
}

TEST_CASE("configuration handles") {
  Config cfg;
  CHECK(cellecon_config_set_annuity_mode(cfg.handle, "paper") == CELLECON_OK);
  CHECK(cellecon_config_set_annuity_mode(cfg.handle, "standard") == CELLECON_OK);
  CHECK(cellecon_config_set_annuity_mode(cfg.handle, "nope") ==
        CELLECON_ERR_CONFIG);
  CHECK(cellecon_config_set_kf(cfg.handle, 8192) == CELLECON_OK);
  CHECK(cellecon_config_set_kf(cfg.handle, 1000) == CELLECON_ERR_CONFIG);
  CHECK(cellecon_config_set_kf(cfg.handle, 1024) == CELLECON_OK);
  CHECK(cellecon_config_uptake_count(cfg.handle) == 6);
  CHECK(cellecon_config_uptake(cfg.handle, 0) == doctest::Approx(0.03));

  cellecon_config* missing = nullptr;
  CHECK(cellecon_config_load("/no/such/config.json", &missing) ==
        CELLECON_ERR_CONFIG);
  CHECK(missing == nullptr);
}

TEST_CASE("tariff entry points") {
  Config cfg;
  double coeffs[5] = {0, 0, 0, 0, 0};
  CHECK(cellecon_tariff_fit(cfg.handle, "4g", coeffs) == CELLECON_OK);
  double predicted = 0.0;
  CHECK(cellecon_tariff_predict(cfg.handle, "4g", 2000.0, 25000.0, &predicted) ==
        CELLECON_OK);
  const double by_hand = coeffs[0] + coeffs[1] * std::log1p(2000.0) +
                         coeffs[2] * std::log1p(25000.0) + coeffs[3] * 2000.0 +
                         coeffs[4] * 25000.0;
  CHECK(predicted == doctest::Approx(by_hand).epsilon(1e-12));
  CHECK(cellecon_tariff_fit(cfg.handle, "5g", coeffs) == CELLECON_ERR_ARGUMENT);
}

TEST_CASE("table payloads") {
  Config cfg;
  char* csv = nullptr;

  REQUIRE(cellecon_capacity_csv(cfg.handle, &csv) == CELLECON_OK);
  CHECK(take(csv).rfind("technology,", 0) == 0);

  REQUIRE(cellecon_bw_gain_csv(cfg.handle, &csv) == CELLECON_OK);
  CHECK(take(csv).find("\n1,") != std::string::npos);

  REQUIRE(cellecon_power_sweep_csv(cfg.handle, "3g", nullptr, 0, &csv) ==
          CELLECON_OK);
  const std::string power = take(csv);
  CHECK(power.rfind("P_T,mu_RH,R_km2,C_km2,P_OH_BH,P_cell_W,P_km2_kW\n", 0) == 0);
  CHECK(power.find("198.40") != std::string::npos);

  const double demands[3] = {0.0, 95.0, 190.0};
  REQUIRE(cellecon_power_sweep_csv(cfg.handle, "4g", demands, 3, &csv) ==
          CELLECON_OK);
  CHECK(take(csv).find("95.00") != std::string::npos);

  const double overload[1] = {1e6};
  CHECK(cellecon_power_sweep_csv(cfg.handle, "4g", overload, 1, &csv) ==
        CELLECON_ERR_COMPUTE);

  REQUIRE(cellecon_opex_sweep_csv(cfg.handle, "4g", &csv) == CELLECON_OK);
  CHECK(take(csv).find("capex_repayment") != std::string::npos);

  REQUIRE(cellecon_profit_sweep_csv(cfg.handle, 0.03, nullptr, &csv) ==
          CELLECON_OK);
  CHECK(take(csv).find("\n4G,3,") != std::string::npos);
  CHECK(cellecon_profit_sweep_csv(cfg.handle, 0.03, "/no/such/file.csv", &csv) ==
        CELLECON_ERR_CONFIG);

  REQUIRE(cellecon_emissions_csv(cfg.handle, "3g", 190.0, nullptr, &csv) ==
          CELLECON_OK);
  const std::string emissions = take(csv);
  CHECK(emissions.find("3G,") != std::string::npos);
  CHECK(emissions.find("4G,") == std::string::npos);
}

TEST_CASE("concurrent callers see their own results and errors") {
  Config cfg;
  std::atomic<int> mismatches{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 50; ++i) {
        double out = 0.0;
        if (t % 2 == 0) {
          if (cellecon_spectral_efficiency(1.0 + t, &out) != CELLECON_OK ||
              !(out > 0.0))
            ++mismatches;
        } else {
          // Errors must stay thread-local.
          if (cellecon_spectral_efficiency(-1.0, &out) != CELLECON_ERR_DOMAIN ||
              std::strlen(cellecon_last_error()) == 0)
            ++mismatches;
        }
        double charge = 0.0;
        if (cellecon_tariff_predict(cfg.handle, "3g", 2000.0, 1000.0 * (1 + i),
                                    &charge) != CELLECON_OK)
          ++mismatches;
      }
    });
  }
  for (auto& th : threads) th.join();
  CHECK(mismatches.load() == 0);
}

TEST_CASE("report bundle round trip") {
  Config cfg;
  cellecon_report* report = nullptr;
  REQUIRE(cellecon_report_run(cfg.handle, &report) == CELLECON_OK);
  const size_t n = cellecon_report_file_count(report);
  CHECK(n == 16);
  bool saw_summary = false;
  for (size_t i = 0; i < n; ++i) {
    const char* name = cellecon_report_file_name(report, i);
    const char* content = cellecon_report_file_content(report, i);
    REQUIRE(name != nullptr);
    REQUIRE(content != nullptr);
    CHECK(std::strlen(content) > 0);
    if (std::string(name) == "summary.md") saw_summary = true;
  }
  CHECK(saw_summary);
  CHECK(cellecon_report_file_name(report, n) == nullptr);
  cellecon_report_free(report);
}
