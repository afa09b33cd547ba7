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

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qsl/qmat.hpp"

namespace qsl {

/// Damped Jaynes-Cummings reservoir (Lorentzian spectral density) at zero
/// detuning. Times are measured in units of 1/lambda when lambda = 1.
struct AdParams {
  double gamma0 = 0.4;
  double lambda = 1.0;
  double delta = 0.0;   // must stay 0
  double omega0 = 0.0;  // carried for completeness; the reduced dynamics ignore it

  static AdParams from_ratio(double gamma0_over_lambda, double lambda = 1.0);
  /// Throws PreconditionError.
  void validate() const;
  bool markovian() const { return gamma0 < 0.5 * lambda; }
};

/// Ohmic-family dephasing reservoir with cutoff omega_c.
struct PdParams {
  double s = 1.0;
  double omega_c = 1.0;

  void validate() const;
};

class ChannelModel {
 public:
  using Params = std::variant<AdParams, PdParams>;

  static ChannelModel amplitude_damping(const AdParams& p);
  static ChannelModel phase_damping(const PdParams& p);

  bool is_amplitude_damping() const {
    return std::holds_alternative<AdParams>(params_);
  }
  const AdParams& ad() const { return std::get<AdParams>(params_); }
  const PdParams& pd() const { return std::get<PdParams>(params_); }
  const Params& params() const { return params_; }
  std::string describe() const;

 private:
  explicit ChannelModel(Params p) : params_(std::move(p)) {}
  Params params_;
};

struct KrausSet {
  ComplexMatrix2 k1;
  ComplexMatrix2 k2;
  /// Set when |decoherence| exceeded 1 by round-off and sqrt(1 - g^2) was
  /// clamped to zero.
  bool clamped = false;

  /// k1^dagger k1 + k2^dagger k2
  ComplexMatrix2 completeness() const;
};

double spectral_density_ad(double omega, const AdParams& p);
/// G(t). Markovian (d real), oscillatory (d imaginary) and critical
/// (|lambda^2 - 2 gamma0 lambda| < 1e-12 lambda^2) branches are explicit.
double decoherence_ad(double t, const AdParams& p);
double decoherence_ad_derivative(double t, const AdParams& p);
/// 1 - G(t) without cancellation at short times (Taylor series of the
/// damped-oscillator equation G'' + lambda G' + gamma0 lambda G / 2 = 0).
double one_minus_decoherence_ad(double t, const AdParams& p);

double spectral_density_pd(double omega, const PdParams& p);
double dephasing_rate(double t, const PdParams& p);
/// r(t) = exp(-int_0^t gamma). Integrates from zero on every call; use
/// Dynamics for repeated evaluation along a time grid.
double decoherence_pd(double t, const PdParams& p);

/// Kraus pair for a given decoherence value g (G or r).
KrausSet kraus_from_decoherence(double g, const ChannelModel& model);

/// Times in the open interval (a, b), ascending, at which the decoherence
/// function or its derivative changes sign. Speed integrands involve |g|
/// and |g'|, so they have kinks exactly there.
std::vector<double> sign_change_times(const ChannelModel& model, double a, double b);

/// Per-caller evaluator of the reduced dynamics. For phase damping it
/// caches the cumulative dephasing integral at every abscissa beyond the
/// furthest one seen so far, so sweeping a monotone grid integrates each
/// stretch once. Not thread-safe; use one instance per thread.
class Dynamics {
 public:
  explicit Dynamics(ChannelModel model);

  const ChannelModel& model() const { return model_; }

  /// G(t) or r(t).
  double decoherence(double t);
  /// dG/dt or dr/dt = -gamma(t) r(t).
  double decoherence_derivative(double t);
  /// 1 - g(t)^2, accurate when g is close to 1.
  double one_minus_decoherence_squared(double t);
  KrausSet kraus(double t);
  /// Kraus evolution; the result carries a closed-form determinant so
  /// nearly pure states keep their small eigenvalue to full precision.
  DensityMatrix evolve(const DensityMatrix& rho0, double t);
  ComplexMatrix2 derivative(const DensityMatrix& rho0, double t);

 private:
  double dephasing_integral(double t);

  ChannelModel model_;
  double gamma_s_ = 1.0;  // Euler Gamma(s), phase damping only
  std::vector<std::pair<double, double>> knots_;
};

KrausSet kraus_at(double t, const ChannelModel& model);
/// rho(t) = sum_mu K_mu rho0 K_mu^dagger. Throws ConsistencyError if the
/// result is not a density matrix within 1e-10.
DensityMatrix evolve(const DensityMatrix& rho0, double t,
                     const ChannelModel& model);
/// d rho / dt by the chain rule through dG/dt or dr/dt.
ComplexMatrix2 state_derivative(double t, const DensityMatrix& rho0,
                                 const ChannelModel& model);
/// t -> infinity fixed point: the ground state for amplitude damping, the
/// population-only part of rho0 for phase damping.
DensityMatrix stationary_state(const DensityMatrix& rho0,
                               const ChannelModel& model);

}  // namespace qsl
