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

#ifndef CELLECON_CORE_USERS_HPP
#define CELLECON_CORE_USERS_HPP

#include <vector>

#include "errors.hpp"

namespace cellecon {

/// Poisson model of the number of simultaneously active users in a cell,
/// parameterised by the mean cell throughput.
struct ActiveUserModel {
  double lambda = 0.0;              // expected active users per cell
  double mean_cell_rate_bps = 0.0;  // throughput that produced lambda
};

/// One row of the LTE-vs-HSPA bandwidth-gain table.
struct BwGainRow {
  int n_users = 0;
  double lte_bw_mhz = 0.0;
  double hspa_bw_mhz = 0.0;
  double gain = 0.0;
  double probability = 0.0;
};

/// Active-user intensity 0.0031*exp(1.085*log10(rate)). The base-10 reading
/// is the only one consistent with the published occupancy probabilities.
ActiveUserModel lambda_from_rate(double mean_cell_rate_bps);

/// Poisson mass lambda^n e^(-lambda)/n!; evaluated in log space for n > 20.
double poisson_pmf(double lambda, int n);

/// Equal-share allocation capped per user: min(cap, total/n).
double per_user_bandwidth_mhz(double total_bw_mhz, double per_user_cap_mhz, int n_users);

/// Rows n = 1..max_users with the LTE/HSPA bandwidth gain and its
/// Poisson-weighted probability of occurring.
std::vector<BwGainRow> bw_gain_table(const ActiveUserModel& model, int max_users,
                                     double total_bw_mhz = 20.0,
                                     double lte_cap_mhz = 20.0,
                                     double hspa_cap_mhz = 5.0);

/// Probability that the gain exceeds one, i.e. that fewer users are active
/// than the HSPA cap allows. The empty cell (N = 0) counts as full gain.
double prob_gain_exceeds_one(const ActiveUserModel& model, double total_bw_mhz = 20.0,
                             double hspa_cap_mhz = 5.0);

/// Cell throughput when n users share the band equally: (BW/n) * S_eff.
double effective_throughput_bps(double total_bw_mhz, double s_eff_bits_per_hz,
                                int n_users);

}  // namespace cellecon

#endif  // CELLECON_CORE_USERS_HPP
