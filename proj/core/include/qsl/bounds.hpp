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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qsl/channels.hpp"
#include "qsl/qmat.hpp"

namespace qsl {

/// Av: Bures angle over the average Fisher speed.
/// Op/Hs/Tr: sin^2 of the Bures angle over the average generator norm.
/// UnifiedMin: sin^2 over the smallest of the three average norms.
/// Quant: commutator-based quantumness over the average commutator speed.
enum class BoundKind { kAv, kOp, kHs, kTr, kUnifiedMin, kQuant };

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);

/// Function that decays to zero and signals when the state has become
/// numerically indistinguishable from the stationary state.
enum class Witness { kTraceDistanceToStationary, kDecoherenceFunctionMagnitude };

std::string_view to_string(Witness witness);

struct ResolutionConfig {
  double epsilon = 1e-6;
  Witness witness = Witness::kTraceDistanceToStationary;
  double t_max = 60.0;
  double dt = 0.01;

  /// Throws PreconditionError unless 0 < epsilon < 1, dt > 0, t_max > dt.
  void validate() const;
};

/// i * dt for i = 0 .. floor(t_max / dt).
std::vector<double> uniform_grid(double t_max, double dt);

struct BoundSeries {
  BoundKind kind = BoundKind::kAv;
  std::vector<double> times;
  std::vector<double> tau_qsl;
  /// tau_qsl / t, clamped at 1; empty at t = 0 where the ratio is 0/0.
  std::vector<std::optional<double>> tightness;
  std::optional<double> tau_cri;
  /// Value held for t >= tau_cri (modified series only).
  std::optional<double> frozen_value;
  bool modified = false;
};

/// Integrand of the average speed for one bound at time t. UnifiedMin
/// returns the operator-norm speed, the smallest of the three norms of a
/// traceless Hermitian generator.
double speed_integrand(BoundKind kind, double t, const DensityMatrix& rho0,
                       Dynamics& dynamics);

/// Distance-like numerator of the bound at time t: B for Av, sin^2 B for
/// the norm bounds, ||[rho0, rho_t]||_hs = sqrt(Q/2) for Quant.
double bound_numerator(BoundKind kind, double t, const DensityMatrix& rho0,
                       Dynamics& dynamics);

/// int_0^{t_i} of the speed integrand at every grid time. Each grid
/// interval is integrated by adaptive Gauss-Kronrod. For UnifiedMin this is
/// the pointwise minimum of the op, hs and tr integrals.
///
/// grid must start at 0 and increase strictly.
std::vector<double> cumulative_speed_integral(BoundKind kind,
                                              const DensityMatrix& rho0,
                                              Dynamics& dynamics,
                                              std::span<const double> grid);
std::vector<double> cumulative_speed_integral(BoundKind kind,
                                              const DensityMatrix& rho0,
                                              const ChannelModel& model,
                                              std::span<const double> grid);

double witness_value(Witness witness, double t, const DensityMatrix& rho0,
                     Dynamics& dynamics);

/// First grid time after which the witness stays below epsilon up to the
/// end of the grid, refined by bisection to 1e-9. Zero if the witness
/// starts below epsilon; nullopt if it is still above at the last point.
std::optional<double> find_tau_cri(const DensityMatrix& rho0,
                                   Dynamics& dynamics,
                                   std::span<const double> grid,
                                   double epsilon, Witness witness);
std::optional<double> find_tau_cri(const DensityMatrix& rho0,
                                   const ChannelModel& model,
                                   const ResolutionConfig& cfg);

/// numerator * t / cumulative. 0 at t = 0 and when both the numerator and
/// the accumulated speed vanish; DegenerateBoundError when only the speed
/// does.
double qsl_time_from(double numerator, double t, double cumulative);

double qsl_time(BoundKind kind, double t, const DensityMatrix& rho0,
                const ChannelModel& model, double cumulative);

/// Bound series on an explicit grid. In modified mode every time at or
/// beyond tau_cri carries the value the unmodified bound takes at tau_cri.
/// Modified mode throws NoTauCriError when the witness never settles.
BoundSeries qsl_series(BoundKind kind, const DensityMatrix& rho0,
                       Dynamics& dynamics, std::span<const double> grid,
                       double epsilon, Witness witness, bool modified);
BoundSeries qsl_series(BoundKind kind, const DensityMatrix& rho0,
                       const ChannelModel& model, const ResolutionConfig& cfg,
                       bool modified);

std::vector<std::optional<double>> tightness(const BoundSeries& series);

}  // namespace qsl
