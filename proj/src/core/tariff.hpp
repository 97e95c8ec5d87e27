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

#ifndef CELLECON_CORE_TARIFF_HPP
#define CELLECON_CORE_TARIFF_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cellecon {

enum class Technology { hspa_3g, lte_4g };

std::string to_string(Technology tech);
Technology technology_from_string(const std::string& text);

/// One advertised monthly bundle. Unbounded allowances are kept symbolic
/// (nullopt) until normalization pins them to the fair-use equivalents.
struct TariffRecord {
  std::optional<double> minutes;  // nullopt = Unlimited
  std::optional<double> data_gb;  // nullopt = Unlimited
  double cost_gbp = 0.0;
  std::string operator_name;
  std::string country;
  Technology technology = Technology::hspa_3g;
};

/// Fair-use caps applied to "Unlimited" allowances, plus the GB->MB factor.
struct NormalizationRules {
  double unlimited_minutes = 2000.0;
  double unlimited_data_gb = 25.0;
  double gb_to_mb = 1000.0;
};

struct NormalizedTariff {
  double minutes = 0.0;
  double data_mb = 0.0;
  double cost_gbp = 0.0;
};

/// Fitted coefficients of the cost surface
/// b0 + b1*ln(1+minutes) + b2*ln(1+data_mb) + b3*minutes + b4*data_mb.
struct RegressionCoefficients {
  std::array<double, 5> b{};
};

/// A sellable monthly data level: a 0.5 GB multiple, or Unlimited (nullopt).
struct TariffLevel {
  std::optional<double> gb;

  bool unlimited() const { return !gb.has_value(); }
};

/// Parses the tariff CSV (header `minutes,data_gb,cost_gbp,operator,country,
/// technology`, literal `Unlimited` markers allowed) and keeps only rows of
/// the requested technology. Rows of any other known technology are an error,
/// matching the one-technology-per-file corpus layout.
std::vector<TariffRecord> load_corpus(const std::string& csv_text, Technology tech);
std::vector<TariffRecord> load_corpus_file(const std::string& path, Technology tech);

NormalizedTariff normalize(const TariffRecord& record, const NormalizationRules& rules);

/// OLS fit of the cost surface over the normalized corpus.
RegressionCoefficients fit(const std::vector<NormalizedTariff>& records);

/// Evaluates the fitted surface; no clamping.
double predict(const RegressionCoefficients& c, double minutes, double data_mb);

/// Smallest sellable level covering the demand: ceiling to the next 0.5 GB,
/// minimum 0.5 GB; anything above 25 GB is only satisfiable as Unlimited.
TariffLevel select_tariff(double demand_gb_per_month);

/// Monthly charge for a level, read off the surface at the fair-use minute
/// allowance and rounded to the nearest 0.50 as tariffs are advertised.
double tariff_charge(const RegressionCoefficients& c, const TariffLevel& level,
                     const NormalizationRules& rules);

}  // namespace cellecon

#endif  // CELLECON_CORE_TARIFF_HPP
