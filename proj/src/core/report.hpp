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

#ifndef CELLECON_CORE_REPORT_HPP
#define CELLECON_CORE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace cellecon {

struct NamedFile {
  std::string name;
  std::string content;
};

/// All output tables plus the markdown summary; byte-deterministic for a
/// fixed configuration.
struct ReportBundle {
  std::vector<NamedFile> files;

  const NamedFile* find(const std::string& name) const;
};

// Individual table generators (each is one CLI subcommand's payload).
std::string capacity_csv(const ScenarioConfig& cfg);
std::string bw_gain_csv(const ScenarioConfig& cfg);
std::string power_sweep_csv(const ScenarioConfig& cfg, Technology tech,
                            const std::vector<double>& demands);
std::string energy_csv(const ScenarioConfig& cfg);
std::string opex_sweep_csv(const ScenarioConfig& cfg, Technology tech);
std::string tariff_fit_csv(const ScenarioConfig& cfg);
std::string profit_sweep_csv(const ScenarioConfig& cfg, double uptake_4g,
                             const std::optional<CostOverride>& override_costs);
std::string emissions_csv(const ScenarioConfig& cfg, double demand_mbps_km2,
                          const std::optional<FuelMix>& mix_override,
                          const std::optional<Technology>& only = std::nullopt);

/// Fitted tariff surface for one technology's corpus.
RegressionCoefficients fit_tariffs(const ScenarioConfig& cfg, Technology tech);

/// Cost model wired up for one technology (config annuity mode).
double annual_cost_per_km2(const ScenarioConfig& cfg, Technology tech,
                           double demand_mbps_km2);

/// Profit sweep inputs for one technology; `override_costs` substitutes the
/// annual-cost column verbatim where table replication is wanted. Without an
/// override the returned cost function refers back to `cfg`, which must stay
/// alive while the sweep runs.
TechEconomics technology_economics(const ScenarioConfig& cfg, Technology tech,
                                   const std::optional<CostOverride>& override_costs);

/// The full bundle: every table over the configured grids plus summary.md.
ReportBundle run_report(const ScenarioConfig& cfg);

}  // namespace cellecon

#endif  // CELLECON_CORE_REPORT_HPP
