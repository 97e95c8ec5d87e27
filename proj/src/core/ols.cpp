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

#include "ols.hpp"

#include <algorithm>
#include <cmath>

namespace cellecon {

std::vector<double> least_squares(std::vector<double> design, std::size_t n_rows,
                                  std::size_t n_cols, std::vector<double> rhs) {
  if (design.size() != n_rows * n_cols || rhs.size() != n_rows)
    throw domain_error("least_squares: inconsistent matrix dimensions");
  if (n_rows < n_cols)
    throw singular_fit_error("least squares needs at least as many rows as columns");

  auto at = [&](std::size_t r, std::size_t c) -> double& {
    return design[r * n_cols + c];
  };

  // Householder QR: reduce the design to upper-triangular form, applying the
  // same reflections to the right-hand side.
  for (std::size_t k = 0; k < n_cols; ++k) {
    double norm = 0.0;
    for (std::size_t r = k; r < n_rows; ++r) norm += at(r, k) * at(r, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw singular_fit_error("rank-deficient regression design");

    const double alpha = at(k, k) >= 0.0 ? -norm : norm;
    std::vector<double> v(n_rows - k);
    v[0] = at(k, k) - alpha;
    for (std::size_t r = k + 1; r < n_rows; ++r) v[r - k] = at(r, k);
    double vnorm2 = 0.0;
    for (double x : v) vnorm2 += x * x;
    if (vnorm2 == 0.0) {
      at(k, k) = alpha;
      continue;
    }

    for (std::size_t c = k; c < n_cols; ++c) {
      double dot = 0.0;
      for (std::size_t r = k; r < n_rows; ++r) dot += v[r - k] * at(r, c);
      const double scale = 2.0 * dot / vnorm2;
      for (std::size_t r = k; r < n_rows; ++r) at(r, c) -= scale * v[r - k];
    }
    double dot = 0.0;
    for (std::size_t r = k; r < n_rows; ++r) dot += v[r - k] * rhs[r];
    const double scale = 2.0 * dot / vnorm2;
    for (std::size_t r = k; r < n_rows; ++r) rhs[r] -= scale * v[r - k];
  }

  // Back substitution on the triangular factor. Pivots are judged relative
  // to the largest diagonal so column scaling does not mask deficiency.
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n_cols; ++i)
    max_diag = std::max(max_diag, std::abs(at(i, i)));
  const double pivot_floor = max_diag * 1e-12;
  std::vector<double> beta(n_cols, 0.0);
  for (std::size_t i = n_cols; i-- > 0;) {
    double sum = rhs[i];
    for (std::size_t j = i + 1; j < n_cols; ++j) sum -= at(i, j) * beta[j];
    if (!(std::abs(at(i, i)) > pivot_floor))
      throw singular_fit_error("rank-deficient regression design");
    beta[i] = sum / at(i, i);
  }
  return beta;
}

}  // namespace cellecon
