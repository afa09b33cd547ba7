// Copyright 2026 The qslbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <functional>
#include <limits>

namespace qsl {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

namespace detail {

template <typename F>
double simpson_step(F& f, double a, double fa, double m, double fm, double b,
                    double fb, double whole, double tol, int depth,
                    double& error) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double refined = left + right;
  const double delta = refined - whole;
  const bool roundoff_floor =
      std::abs(delta) <= 64.0 * std::numeric_limits<double>::epsilon() *
                             std::abs(refined);
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol || roundoff_floor ||
      !(m > a && b > m)) {
    error += std::abs(delta) / 15.0;
    return refined + delta / 15.0;
  }
  return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1,
                      error) +
         simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1,
                      error);
}

}  // namespace detail

/// Adaptive Simpson rule with Richardson correction. The tolerance is
/// split evenly between halves at every level; recursion stops at
/// max_depth and the leftover error is reported rather than thrown.
template <typename F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, double tol,
                                  int max_depth = 60) {
  QuadratureResult out;
  if (a == b) return out;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  out.value = detail::simpson_step(f, a, fa, m, fm, b, fb, whole, tol,
                                   max_depth, out.error);
  return out;
}

/// Adaptive 15-point Gauss-Kronrod on [a, b]. The integrand is never
/// sampled at the endpoints, so removable jumps there do not matter.
QuadratureResult gauss_kronrod(const std::function<double(double)>& f,
                               double a, double b, double rel_tol = 1e-13,
                               unsigned max_depth = 12);

}  // namespace qsl
