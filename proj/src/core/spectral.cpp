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

#include "spectral.hpp"

#include <cmath>

namespace cellecon {

double shannon_capacity_bps(double bandwidth_hz, double snr) {
  if (!(bandwidth_hz > 0.0)) throw domain_error("bandwidth must be > 0");
  if (snr < 0.0) throw domain_error("snr must be >= 0");
  return bandwidth_hz * std::log2(1.0 + snr);
}

double q_factor(double zeta, double alpha) {
  if (zeta < 0.0) throw domain_error("zeta must be >= 0");
  if (alpha != 4.0)
    throw domain_error("q_factor is only evaluable for path-loss exponent 4");
  const double t = std::pow(2.0, zeta) - 1.0;
  if (t <= 0.0) return 0.0;  // continuous extension at zeta = 0
  const double s = std::sqrt(t);
  return s * (M_PI / 2.0 - std::atan(1.0 / s));
}

SpectralEfficiency spectral_efficiency(const SinrInefficiency& ineff,
                                       const QuadratureConfig& quad) {
  ineff.validate();
  quad.validate();
  const double mu = ineff.mu;
  auto integrand = [mu](double zeta) {
    const double t = mu * std::pow(2.0, zeta) - 1.0;
    if (t <= 0.0) return 1.0;  // mu = 1, zeta = 0: removable point
    const double s = std::sqrt(t);
    return 1.0 / (1.0 + s * (M_PI / 2.0 - std::atan(1.0 / s)));
  };
  // The integrand decays like (1/sqrt(2))^zeta, so the tail beyond the
  // default limit of 60 is below 2e-9 and the truncation is immaterial.
  const double value = integrate_adaptive(integrand, 0.0, quad.upper_limit,
                                          quad.abs_tolerance, quad.max_subdivisions);
  SpectralEfficiency out{value};
  out.validate();
  return out;
}

double cell_capacity_bps(double bandwidth_hz, const SpectralEfficiency& s_eff) {
  if (!(bandwidth_hz > 0.0)) throw domain_error("bandwidth must be > 0");
  return bandwidth_hz * s_eff.value;
}

}  // namespace cellecon
