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

#include "qsl/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace qsl {

QuadratureResult gauss_kronrod(const std::function<double(double)>& f,
                               double a, double b, double rel_tol,
                               unsigned max_depth) {
  QuadratureResult out;
  if (a == b) return out;
  out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, max_depth, rel_tol, &out.error);
  return out;
}

}  // namespace qsl
