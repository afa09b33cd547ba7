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

#include "qsl/channels.hpp"
#include "qsl/qmat.hpp"

namespace qsl {

/// Eigenpairs whose weight p_i + p_j does not exceed this are dropped from
/// the Fisher-information sum. Only exact zeros are dropped: the diagonal
/// term pdot^2 / p keeps a finite limit as p -> 0 along a smooth path, and
/// discarding it biases the Fisher speed near pure states.
inline constexpr double kQfiRegularization = 0.0;

/// Every instantaneous quantity along a trajectory at one time.
struct MetricSample {
  double t = 0.0;
  double bures_angle = 0.0;     // B(rho0, rho_t), in [0, pi/2]
  double trace_distance = 0.0;  // D(rho_t, rho_stat)
  double qfi = 0.0;
  double quantumness = 0.0;     // Q(rho0, rho_t)
  double speed_op = 0.0;
  double speed_hs = 0.0;
  double speed_tr = 0.0;
  double speed_quant = 0.0;     // ||[rho0, d rho_t/dt]||_hs
};

/// Bures fidelity Tr sqrt(sqrt(rho0) rho1 sqrt(rho0)), evaluated through
/// the qubit identity F^2 = Tr(rho0 rho1) + 2 sqrt(det rho0 det rho1).
/// Clamped to [0, 1].
double bures_fidelity(const DensityMatrix& rho0, const DensityMatrix& rho1);

/// Same quantity by explicit matrix square roots. Loses accuracy when
/// either state is close to pure (tiny eigenvalues enter through a sqrt).
double bures_fidelity_sqrt_route(const DensityMatrix& rho0,
                                 const DensityMatrix& rho1);

/// 1 - F^2, computed without forming F first.
double bures_infidelity_squared(const DensityMatrix& rho0,
                                const DensityMatrix& rho1);

/// arccos F, evaluated as atan2(sqrt(1 - F^2), F) for accuracy near 0.
double bures_angle(const DensityMatrix& rho0, const DensityMatrix& rho1);

double trace_distance(const DensityMatrix& rho0, const DensityMatrix& rho1);

/// Quantum Fisher information of the path through rho with velocity
/// rho_dot, summed in the eigenbasis of rho (from rho.det(), see
/// DensityMatrix::with_determinant):
///   sum_{p_i + p_j > 0} 2 |<i|rho_dot|j>|^2 / (p_i + p_j).
/// DivergentQfiError is raised when a zero-weight pair carries a matrix
/// element above 1e-8, i.e. rho_dot leaves the support of rho.
double qfi(const DensityMatrix& rho, const ComplexMatrix2& rho_dot);

/// SLD L solving rho_dot = (rho L + L rho) / 2 on the regularized support.
ComplexMatrix2 symmetric_log_derivative(const DensityMatrix& rho,
                                        const ComplexMatrix2& rho_dot);

/// Tr(rho L^2) with L from symmetric_log_derivative.
double qfi_via_sld(const DensityMatrix& rho, const ComplexMatrix2& rho_dot);

/// Q = 2 ||[rho0, rho1]||_hs^2
double quantumness(const DensityMatrix& rho0, const DensityMatrix& rho1);

MetricSample metric_sample(double t, const DensityMatrix& rho0,
                           Dynamics& dynamics);
MetricSample metric_sample(double t, const DensityMatrix& rho0,
                           const ChannelModel& model);

}  // namespace qsl
