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

#include "qsl/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

constexpr double kDerivativeTolerance = 1e-10;
constexpr double kKernelElement = 1e-8;

double trace_of_product(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return (a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0) + a(1, 0) * b(0, 1) +
          a(1, 1) * b(1, 1))
      .real();
}

struct FidelityParts {
  double overlap;  // Tr(rho0 rho1)
  double mixed;    // 2 sqrt(det rho0 det rho1)
};

FidelityParts fidelity_parts(const DensityMatrix& rho0,
                             const DensityMatrix& rho1) {
  const double dets = std::max(rho0.det(), 0.0) * std::max(rho1.det(), 0.0);
  return {trace_of_product(rho0.matrix(), rho1.matrix()),
          2.0 * std::sqrt(dets)};
}

void require_velocity(const ComplexMatrix2& rho_dot) {
  if (!rho_dot.all_finite())
    throw PreconditionError("qfi: non-finite derivative");
  if (rho_dot.hermiticity_defect() > kDerivativeTolerance)
    throw PreconditionError("qfi: derivative is not Hermitian");
  if (std::abs(rho_dot.trace()) > kDerivativeTolerance)
    throw PreconditionError("qfi: derivative is not traceless");
}

struct EigenFrame {
  std::array<double, 2> p;
  std::array<Vector2, 2> v;
  ComplexMatrix2 velocity;  // <i|rho_dot|j>
};

EigenFrame eigen_frame(const DensityMatrix& rho, const ComplexMatrix2& rho_dot) {
  require_velocity(rho_dot);
  const HermitianEigen e = rho.eigen();
  EigenFrame f;
  f.v = e.vectors;
  for (std::size_t i = 0; i < 2; ++i) f.p[i] = std::max(e.values[i], 0.0);
  const ComplexMatrix2 h = rho_dot.hermitian_part();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f.velocity(i, j) = inner(f.v[i], multiply(h, f.v[j]));
  return f;
}

void check_dropped(double weight, Complex element) {
  const double size = std::abs(element);
  if (size > kKernelElement) {
    std::ostringstream msg;
    msg << "qfi: derivative element " << size
        << " on a zero-weight eigenpair (p_i + p_j = " << weight << ")";
    throw DivergentQfiError(msg.str());
  }
}

}  // namespace

double bures_fidelity(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (rho0 == rho1) return 1.0;
  const auto [overlap, mixed] = fidelity_parts(rho0, rho1);
  return std::clamp(std::sqrt(std::max(overlap + mixed, 0.0)), 0.0, 1.0);
}

double bures_fidelity_sqrt_route(const DensityMatrix& rho0,
                                 const DensityMatrix& rho1) {
  const ComplexMatrix2 root = psd_sqrt(rho0.matrix());
  const ComplexMatrix2 inner_product = root * rho1.matrix() * root;
  // det is multiplicative, so the small eigenvalue of the product comes
  // from the two state determinants instead of a cancelling difference.
  const HermitianEigen e = hermitian_eigendecomposition(
      inner_product.hermitian_part(), std::max(rho0.det(), 0.0) * std::max(rho1.det(), 0.0));
  const double f = std::sqrt(std::max(e.values[0], 0.0)) +
                   std::sqrt(std::max(e.values[1], 0.0));
  return std::clamp(f, 0.0, 1.0);
}

double bures_infidelity_squared(const DensityMatrix& rho0,
                                const DensityMatrix& rho1) {
  if (rho0 == rho1) return 0.0;
  const auto [overlap, mixed] = fidelity_parts(rho0, rho1);
  return std::clamp((1.0 - overlap) - mixed, 0.0, 1.0);
}

double bures_angle(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  if (rho0 == rho1) return 0.0;
  const auto [overlap, mixed] = fidelity_parts(rho0, rho1);
  const double cos2 = std::clamp(overlap + mixed, 0.0, 1.0);
  const double sin2 = std::clamp((1.0 - overlap) - mixed, 0.0, 1.0);
  return std::atan2(std::sqrt(sin2), std::sqrt(cos2));
}

double trace_distance(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  const ComplexMatrix2 diff = rho0.matrix() - rho1.matrix();
  // Eigenvalues of the Hermitian difference are mean +/- radius.
  const double mean = 0.5 * (diff(0, 0).real() + diff(1, 1).real());
  const double radius =
      std::hypot(0.5 * (diff(0, 0).real() - diff(1, 1).real()),
                 std::abs(0.5 * (diff(0, 1) + std::conj(diff(1, 0)))));
  return std::min(std::max(std::abs(mean), radius), 1.0);
}

double qfi(const DensityMatrix& rho, const ComplexMatrix2& rho_dot) {
  const EigenFrame f = eigen_frame(rho, rho_dot);
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double weight = f.p[i] + f.p[j];
      if (weight > kQfiRegularization) {
        sum += 2.0 * std::norm(f.velocity(i, j)) / weight;
      } else {
        check_dropped(weight, f.velocity(i, j));
      }
    }
  }
  return sum;
}

ComplexMatrix2 symmetric_log_derivative(const DensityMatrix& rho,
                                        const ComplexMatrix2& rho_dot) {
  const EigenFrame f = eigen_frame(rho, rho_dot);
  ComplexMatrix2 sld;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double weight = f.p[i] + f.p[j];
      if (weight > kQfiRegularization) {
        sld += (2.0 * f.velocity(i, j) / weight) *
               ComplexMatrix2::outer(f.v[i], f.v[j]);
      } else {
        check_dropped(weight, f.velocity(i, j));
      }
    }
  }
  return sld;
}

double qfi_via_sld(const DensityMatrix& rho, const ComplexMatrix2& rho_dot) {
  const ComplexMatrix2 sld = symmetric_log_derivative(rho, rho_dot);
  return trace_of_product(rho.matrix(), sld * sld);
}

double quantumness(const DensityMatrix& rho0, const DensityMatrix& rho1) {
  const double c = commutator_hs_norm(rho0.matrix(), rho1.matrix());
  return 2.0 * c * c;
}

MetricSample metric_sample(double t, const DensityMatrix& rho0,
                           Dynamics& dynamics) {
  const DensityMatrix rho_t = dynamics.evolve(rho0, t);
  const ComplexMatrix2 velocity = dynamics.derivative(rho0, t);
  const MatrixNorms speed = norms(velocity);

  MetricSample s;
  s.t = t;
  s.bures_angle = bures_angle(rho0, rho_t);
  s.trace_distance =
      trace_distance(rho_t, stationary_state(rho0, dynamics.model()));
  s.qfi = qfi(rho_t, velocity);
  s.quantumness = quantumness(rho0, rho_t);
  s.speed_op = speed.op;
  s.speed_hs = speed.hs;
  s.speed_tr = speed.tr;
  s.speed_quant = commutator_hs_norm(rho0.matrix(), velocity);
  return s;
}

MetricSample metric_sample(double t, const DensityMatrix& rho0,
                           const ChannelModel& model) {
  Dynamics dynamics(model);
  return metric_sample(t, rho0, dynamics);
}

}  // namespace qsl
