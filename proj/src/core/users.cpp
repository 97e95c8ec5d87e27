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

#include "users.hpp"

#include <cmath>

namespace cellecon {

ActiveUserModel lambda_from_rate(double mean_cell_rate_bps) {
  if (!(mean_cell_rate_bps > 0.0)) throw domain_error("mean cell rate must be > 0");
  const double lambda = 0.0031 * std::exp(1.085 * std::log10(mean_cell_rate_bps));
  return ActiveUserModel{lambda, mean_cell_rate_bps};
}

double poisson_pmf(double lambda, int n) {
  if (!(lambda > 0.0)) throw domain_error("poisson lambda must be > 0");
  if (n < 0) throw domain_error("poisson count must be >= 0");
  if (n <= 20) {
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    return std::pow(lambda, n) * std::exp(-lambda) / fact;
  }
  return std::exp(n * std::log(lambda) - lambda - std::lgamma(n + 1.0));
}

double per_user_bandwidth_mhz(double total_bw_mhz, double per_user_cap_mhz,
                              int n_users) {
  if (n_users < 1) throw domain_error("per-user bandwidth needs at least one user");
  return std::min(per_user_cap_mhz, total_bw_mhz / n_users);
}

std::vector<BwGainRow> bw_gain_table(const ActiveUserModel& model, int max_users,
                                     double total_bw_mhz, double lte_cap_mhz,
                                     double hspa_cap_mhz) {
  if (max_users < 1) throw domain_error("bandwidth-gain table needs max_users >= 1");
  std::vector<BwGainRow> rows;
  rows.reserve(max_users);
  for (int n = 1; n <= max_users; ++n) {
    BwGainRow row;
    row.n_users = n;
    row.lte_bw_mhz = per_user_bandwidth_mhz(total_bw_mhz, lte_cap_mhz, n);
    row.hspa_bw_mhz = per_user_bandwidth_mhz(total_bw_mhz, hspa_cap_mhz, n);
    row.gain = row.lte_bw_mhz / row.hspa_bw_mhz;
    row.probability = poisson_pmf(model.lambda, n);
    rows.push_back(row);
  }
  return rows;
}

double prob_gain_exceeds_one(const ActiveUserModel& model, double total_bw_mhz,
                             double hspa_cap_mhz) {
  // Gain exceeds one while the fair share is still above the HSPA cap,
  // i.e. for n < total/cap; the empty cell counts as full gain.
  const int threshold = static_cast<int>(std::ceil(total_bw_mhz / hspa_cap_mhz));
  double p = 0.0;
  for (int n = 0; n < threshold; ++n) p += poisson_pmf(model.lambda, n);
  return p;
}

double effective_throughput_bps(double total_bw_mhz, double s_eff_bits_per_hz,
                                int n_users) {
  const double share_mhz = per_user_bandwidth_mhz(total_bw_mhz, total_bw_mhz, n_users);
  return share_mhz * 1e6 * s_eff_bits_per_hz;
}

}  // namespace cellecon
