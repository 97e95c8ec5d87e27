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

#ifndef CELLECON_CORE_QUADRATURE_HPP
#define CELLECON_CORE_QUADRATURE_HPP

#include <functional>

#include "errors.hpp"

namespace cellecon {

struct QuadratureConfig {
  double upper_limit = 60.0;     // truncation of the improper integral
  double abs_tolerance = 1e-6;
  int max_subdivisions = 100000;

  void validate() const {
    if (!(upper_limit > 0.0)) throw domain_error("quadrature upper_limit must be > 0");
    if (!(abs_tolerance > 0.0)) throw domain_error("quadrature abs_tolerance must be > 0");
    if (max_subdivisions < 1) throw domain_error("quadrature max_subdivisions must be >= 1");
  }
};

/// Adaptive Simpson integration of f over [a, b] to an absolute tolerance.
///
/// Each interval is accepted when the two-panel refinement agrees with the
/// single-panel estimate to within its share of the tolerance; the accepted
/// value includes the Richardson extrapolation term, so the embedded rule is
/// effectively fifth order. Throws quadrature_error (carrying the partial
/// estimate) if the subdivision budget is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tolerance, int max_subdivisions);

}  // namespace cellecon

#endif  // CELLECON_CORE_QUADRATURE_HPP
