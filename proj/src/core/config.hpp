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

#ifndef CELLECON_CORE_CONFIG_HPP
#define CELLECON_CORE_CONFIG_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "cost.hpp"
#include "emissions.hpp"
#include "profit.hpp"

namespace cellecon {

/// Per-technology bundle: configured spectral efficiency, radio limits and
/// deployment. The inefficiency factor is carried for the quadrature route
/// but downstream throughput uses the configured S_eff directly.
struct TechnologyProfile {
  double s_eff_bits_per_hz = 0.0;
  double mu = 1.0;
  double bandwidth_mhz = 20.0;
  double per_user_cap_mhz = 20.0;
  Deployment deployment;

  /// Cell throughput feeding the sweeps. The published capacity figures are
  /// quantized to whole Mb/s (42.8 -> 43, 16.4 -> 16) and the area capacities
  /// derive from those integers, so the same convention applies here.
  double cell_capacity_mbps() const {
    const double exact = bandwidth_mhz * s_eff_bits_per_hz;
    const double rounded = std::round(exact);
    return rounded > 0.0 ? rounded : exact;
  }
};

/// The whole scenario: defaults reproduce the published baseline, every
/// field can be overridden from a JSON document.
struct ScenarioConfig {
  TechnologyProfile lte;   // 4G
  TechnologyProfile hspa;  // 3G

  PowerParams power;
  int hours_per_day = 24;
  int days_per_year = 365;

  CapexParams capex;
  OpexParams opex;  // marketing and amortization apply to the 4G build-out
  // The published cost totals embed the textbook annuity factor even though
  // the repayment row prints the other one, so standard is the default.
  AnnuityMode annuity_mode = AnnuityMode::standard;

  NormalizationRules tariff_rules;
  std::string corpus_text_3g;  // resolved CSV content (file or built-in)
  std::string corpus_text_4g;

  UsageConversion usage;
  double user_density_per_km2 = 3000.0;
  std::vector<double> uptake_fractions_4g = {0.03, 0.06, 0.09, 0.20, 0.40, 0.90};
  std::vector<double> demand_grid_mbps;  // filled by defaults: 5,10,20..190

  FuelMix fuel_mix;
  long reference_cell_count = 20000;

  std::string output_dir = "out";

  /// 3G cost parameters: CAPEX treated as repaid, so no annuity and no
  /// marketing share.
  OpexParams hspa_opex() const {
    OpexParams o = opex;
    o.marketing_fraction = 0.0;
    o.amortize_capex = false;
    return o;
  }

  const TechnologyProfile& profile(Technology tech) const {
    return tech == Technology::lte_4g ? lte : hspa;
  }
  std::vector<double> power_grid_mbps() const;  // demand grid with a zero row

  void validate() const;
};

/// Baseline configuration (no file needed).
ScenarioConfig default_config();

/// Parses and validates a JSON config; unknown keys, type mismatches and
/// constraint violations raise config_error naming the offending key.
/// Relative corpus paths resolve against the config file's directory.
ScenarioConfig load_config_file(const std::string& path);
ScenarioConfig load_config_text(const std::string& json_text,
                                const std::string& base_dir);

/// Per-demand annual-cost override table (`technology,demand_mbps_km2,
/// cost_gbp`), used to replicate published tables whose cost column is not
/// derivable from the cost model.
using CostOverride = std::map<std::pair<Technology, double>, double>;
CostOverride load_cost_override_file(const std::string& path);
CostOverride load_cost_override(const std::string& csv_text);

}  // namespace cellecon

#endif  // CELLECON_CORE_CONFIG_HPP
