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

#include "tariff.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "csv.hpp"
#include "ols.hpp"

namespace cellecon {

std::string to_string(Technology tech) {
  return tech == Technology::hspa_3g ? "3G" : "4G";
}

Technology technology_from_string(const std::string& text) {
  if (text == "3G" || text == "3g") return Technology::hspa_3g;
  if (text == "4G" || text == "4g") return Technology::lte_4g;
  throw parse_error("unknown technology tag '" + text + "'");
}

namespace {

std::optional<double> parse_allowance(const std::string& field, const char* what,
                                      long line) {
  if (field == "Unlimited" || field == "unlimited") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size() || v < 0.0) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw parse_error(std::string("bad ") + what + " value '" + field + "'", line);
  }
}

}  // namespace

std::vector<TariffRecord> load_corpus(const std::string& csv_text, Technology tech) {
  const auto table = parse_csv(csv_text);
  std::vector<TariffRecord> records;
  if (table.empty()) return records;

  const std::vector<std::string> expected = {"minutes", "data_gb",    "cost_gbp",
                                             "operator", "country", "technology"};
  if (table.front() != expected)
    throw parse_error("tariff corpus header mismatch", 1);

  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& row = table[i];
    const long line = static_cast<long>(i) + 1;
    if (row.size() != expected.size())
      throw parse_error("expected 6 fields", line);
    TariffRecord rec;
    rec.minutes = parse_allowance(row[0], "minutes", line);
    rec.data_gb = parse_allowance(row[1], "data_gb", line);
    try {
      rec.cost_gbp = std::stod(row[2]);
    } catch (const std::exception&) {
      throw parse_error("bad cost value '" + row[2] + "'", line);
    }
    if (!(rec.cost_gbp > 0.0)) throw parse_error("tariff cost must be > 0", line);
    rec.operator_name = row[3];
    rec.country = row[4];
    try {
      rec.technology = technology_from_string(row[5]);
    } catch (const parse_error& e) {
      throw parse_error(e.what(), line);
    }
    if (rec.technology != tech)
      throw parse_error("corpus row tagged " + to_string(rec.technology) +
                            " in a " + to_string(tech) + " corpus",
                        line);
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TariffRecord> load_corpus_file(const std::string& path, Technology tech) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open tariff corpus '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_corpus(buf.str(), tech);
}

NormalizedTariff normalize(const TariffRecord& record, const NormalizationRules& rules) {
  NormalizedTariff out;
  out.minutes = record.minutes.value_or(rules.unlimited_minutes);
  out.data_mb = record.data_gb.value_or(rules.unlimited_data_gb) * rules.gb_to_mb;
  out.cost_gbp = record.cost_gbp;
  return out;
}

RegressionCoefficients fit(const std::vector<NormalizedTariff>& records) {
  constexpr std::size_t k = 5;
  if (records.size() < k + 1)
    throw singular_fit_error("tariff fit needs more rows than coefficients");
  std::vector<double> design;
  std::vector<double> rhs;
  design.reserve(records.size() * k);
  rhs.reserve(records.size());
  for (const auto& rec : records) {
    design.push_back(1.0);
    design.push_back(std::log1p(rec.minutes));
    design.push_back(std::log1p(rec.data_mb));
    design.push_back(rec.minutes);
    design.push_back(rec.data_mb);
    rhs.push_back(rec.cost_gbp);
  }
  const auto beta = least_squares(std::move(design), records.size(), k, std::move(rhs));
  RegressionCoefficients out;
  for (std::size_t i = 0; i < k; ++i) out.b[i] = beta[i];
  return out;
}

double predict(const RegressionCoefficients& c, double minutes, double data_mb) {
  if (minutes < 0.0 || data_mb < 0.0)
    throw domain_error("predict needs non-negative allowances");
  return c.b[0] + c.b[1] * std::log1p(minutes) + c.b[2] * std::log1p(data_mb) +
         c.b[3] * minutes + c.b[4] * data_mb;
}

TariffLevel select_tariff(double demand_gb_per_month) {
  if (demand_gb_per_month < 0.0) throw domain_error("data demand must be >= 0");
  double level = std::ceil(demand_gb_per_month * 2.0) / 2.0;
  if (level < 0.5) level = 0.5;
  if (level > 25.0) return TariffLevel{std::nullopt};
  return TariffLevel{level};
}

double tariff_charge(const RegressionCoefficients& c, const TariffLevel& level,
                     const NormalizationRules& rules) {
  const double gb = level.gb.value_or(rules.unlimited_data_gb);
  const double raw = predict(c, rules.unlimited_minutes, gb * rules.gb_to_mb);
  return std::round(raw * 2.0) / 2.0;  // tariffs are advertised in 0.50 steps
}

}  // namespace cellecon
