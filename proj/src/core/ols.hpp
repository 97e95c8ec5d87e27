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

#ifndef CELLECON_CORE_OLS_HPP
#define CELLECON_CORE_OLS_HPP

#include <vector>

#include "errors.hpp"

namespace cellecon {

/// Ordinary least squares via Householder QR on the design matrix itself
/// (no normal equations, so the conditioning is not squared). `design` holds
/// n rows of k regressors, row-major. Throws singular_fit_error when the
/// design is rank deficient.
std::vector<double> least_squares(std::vector<double> design, std::size_t n_rows,
                                  std::size_t n_cols, std::vector<double> rhs);

}  // namespace cellecon

#endif  // CELLECON_CORE_OLS_HPP
