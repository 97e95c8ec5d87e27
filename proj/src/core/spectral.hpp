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

#ifndef CELLECON_CORE_SPECTRAL_HPP
#define CELLECON_CORE_SPECTRAL_HPP

#include "quadrature.hpp"

namespace cellecon {

/// Multiplicative SINR penalty modelling coding/modulation/antenna losses.
/// Only a path-loss exponent of 4 is supported by the closed-form kernel.
struct SinrInefficiency {
  double mu = 1.0;
  double path_loss_exponent = 4.0;

  void validate() const {
    if (!(mu >= 1.0)) throw domain_error("SINR inefficiency factor mu must be >= 1");
    if (path_loss_exponent != 4.0)
      throw domain_error("unsupported path-loss exponent (only 4 is implemented)");
  }
};

/// Mean deliverable rate per hertz, bits/s/Hz. The ideal multi-cell value is
/// about 2.148, so anything above 2.25 indicates a computation gone wrong.
struct SpectralEfficiency {
  double value = 0.0;

  void validate() const {
    if (!(value > 0.0) || value > 2.25)
      throw domain_error("spectral efficiency must lie in (0, 2.25] bits/s/Hz");
  }
};

/// Shannon-Hartley capacity BW*log2(1+snr) in bits/s.
double shannon_capacity_bps(double bandwidth_hz, double snr);

/// Interference kernel sqrt(2^zeta-1)*[pi/2 - arctan(1/sqrt(2^zeta-1))],
/// extended continuously to 0 at zeta = 0. Only alpha = 4 is supported.
double q_factor(double zeta, double alpha);

/// Mean multi-cell spectral efficiency: the capacity integral evaluated by
/// adaptive quadrature over [0, upper_limit]. Strictly decreasing in mu.
SpectralEfficiency spectral_efficiency(const SinrInefficiency& ineff,
                                       const QuadratureConfig& quad);

/// Cell throughput BW * S_eff in bits/s.
double cell_capacity_bps(double bandwidth_hz, const SpectralEfficiency& s_eff);

}  // namespace cellecon

#endif  // CELLECON_CORE_SPECTRAL_HPP
