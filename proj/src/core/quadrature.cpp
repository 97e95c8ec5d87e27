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

#include "quadrature.hpp"

#include <cmath>

namespace cellecon {

namespace {

struct AdaptiveState {
  const std::function<double(double)>& f;
  int budget;
  double accepted = 0.0;  // partial result, reported on failure
};

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double recurse(AdaptiveState& st, double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;

  st.budget -= 2;
  // Accepting at |delta| <= tol leaves the extrapolated error near tol/15,
  // so truncation rather than quadrature dominates the result.
  if (std::abs(delta) <= tol || depth >= 60) {
    const double value = left + right + delta / 15.0;
    st.accepted += value;
    return value;
  }
  if (st.budget <= 0) {
    throw quadrature_error("adaptive quadrature exceeded its subdivision budget",
                           st.accepted + left + right);
  }
  return recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tolerance, int max_subdivisions) {
  if (!(b > a)) throw domain_error("integration interval must satisfy b > a");
  AdaptiveState st{f, max_subdivisions};
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, b - a);
  return recurse(st, a, b, fa, fm, fb, whole, abs_tolerance, 0);
}

}  // namespace cellecon
