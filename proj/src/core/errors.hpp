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

#ifndef CELLECON_CORE_ERRORS_HPP
#define CELLECON_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cellecon {

/// Invalid numeric input (negative bandwidth, load outside [0,1], ...).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Demanded traffic exceeds the available capacity; never clamped silently.
class overload_error : public std::runtime_error {
 public:
  overload_error(double demand, double capacity)
      : std::runtime_error("demanded traffic " + std::to_string(demand) +
                           " Mbps/km2 exceeds area capacity " +
                           std::to_string(capacity) + " Mbps/km2"),
        demand_mbps_km2(demand),
        capacity_mbps_km2(capacity) {}
  double demand_mbps_km2;
  double capacity_mbps_km2;
};

/// Malformed input file; carries the 1-based line number when known.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, long line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                    : what),
        line_number(line) {}
  long line_number;
};

/// Rank-deficient regression design.
class singular_fit_error : public std::runtime_error {
 public:
  explicit singular_fit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Quadrature did not converge within the subdivision budget; the partial
/// estimate accumulated so far is preserved.
class quadrature_error : public std::runtime_error {
 public:
  quadrature_error(const std::string& what, double partial)
      : std::runtime_error(what), partial_estimate(partial) {}
  double partial_estimate;
};

/// Configuration problem: unknown key, type mismatch, failed validation.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cellecon

#endif  // CELLECON_CORE_ERRORS_HPP
